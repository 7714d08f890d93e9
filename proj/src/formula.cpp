#include "tripos/formula.hpp"

#include <stdexcept>

namespace tripos {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<Formula>(std::move(f)); }

}  // namespace

FormulaPtr f_top() { return make({Formula::Kind::Top, {}, nullptr, nullptr, "", FinSet(0), nullptr}); }
FormulaPtr f_bot() { return make({Formula::Kind::Bot, {}, nullptr, nullptr, "", FinSet(0), nullptr}); }

FormulaPtr f_atom(Predicate pred, std::vector<FinSet> shape, std::vector<std::string> args) {
  if (shape.size() != args.size())
    throw std::invalid_argument("atom: one argument variable per shape factor required");
  long long prod = 1;
  for (const FinSet& s : shape) prod *= s.size;
  if (prod != pred.index.size)
    throw std::invalid_argument("atom: shape product does not match predicate index");
  Formula f{Formula::Kind::Atomic, Atom{std::move(pred), std::move(shape), std::move(args)},
            nullptr, nullptr, "", FinSet(0), nullptr};
  return make(std::move(f));
}

namespace {

FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  return make({k, {}, std::move(a), std::move(b), "", FinSet(0), nullptr});
}

FormulaPtr quant(Formula::Kind k, std::string var, FinSet sort, FormulaPtr body) {
  return make({k, {}, nullptr, nullptr, std::move(var), sort, std::move(body)});
}

}  // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Or, std::move(a), std::move(b)); }
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Imp, std::move(a), std::move(b)); }
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Iff, std::move(a), std::move(b)); }

FormulaPtr f_forall(std::string var, FinSet sort, FormulaPtr body) {
  return quant(Formula::Kind::Forall, std::move(var), sort, std::move(body));
}
FormulaPtr f_exists(std::string var, FinSet sort, FormulaPtr body) {
  return quant(Formula::Kind::Exists, std::move(var), sort, std::move(body));
}

FinSet context_product(const Context& ctx) {
  long long prod = 1;
  for (const ContextVar& v : ctx) {
    prod *= v.sort.size;
    if (prod > (1 << 22)) throw CapExceeded("context_product: context too large");
  }
  return FinSet(static_cast<int>(prod));
}

namespace {

/// Decodes a context code into per-variable values (row-major, first
/// variable most significant).
std::vector<int> decode_context(long long code, const Context& ctx) {
  std::vector<int> vals(ctx.size());
  for (size_t k = ctx.size(); k-- > 0;) {
    int s = ctx[k].sort.size;
    vals[k] = static_cast<int>(code % s);
    code /= s;
  }
  return vals;
}

FinMap atom_tupling(const Atom& atom, const Context& ctx) {
  // Resolve each argument variable; innermost binding (last occurrence) wins.
  std::vector<int> positions(atom.args.size());
  for (size_t k = 0; k < atom.args.size(); ++k) {
    int pos = -1;
    for (size_t j = ctx.size(); j-- > 0;) {
      if (ctx[j].name == atom.args[k]) {
        pos = static_cast<int>(j);
        break;
      }
    }
    if (pos < 0)
      throw std::invalid_argument("eval_formula: unbound variable '" + atom.args[k] + "'");
    if (!(ctx[static_cast<size_t>(pos)].sort == atom.shape[k]))
      throw std::invalid_argument("eval_formula: variable '" + atom.args[k] +
                                  "' has the wrong sort for its atom position");
    positions[k] = pos;
  }
  FinSet dom = context_product(ctx);
  std::vector<int> table(static_cast<size_t>(dom.size));
  for (long long code = 0; code < dom.size; ++code) {
    std::vector<int> vals = decode_context(code, ctx);
    long long enc = 0;
    for (size_t k = 0; k < atom.args.size(); ++k)
      enc = enc * atom.shape[k].size + vals[static_cast<size_t>(positions[k])];
    table[static_cast<size_t>(code)] = static_cast<int>(enc);
  }
  return FinMap(dom, atom.pred.index, std::move(table));
}

/// Projection (ctx, x:sort) -> ctx dropping the innermost variable.
FinMap drop_last(const Context& extended) {
  Context outer(extended.begin(), extended.end() - 1);
  FinSet dom = context_product(extended);
  FinSet cod = context_product(outer);
  int s = extended.back().sort.size;
  std::vector<int> table(static_cast<size_t>(dom.size));
  for (int z = 0; z < dom.size; ++z) table[static_cast<size_t>(z)] = z / s;
  return FinMap(dom, cod, std::move(table));
}

}  // namespace

Predicate eval_formula(const TriposInstance& T, const FormulaPtr& f, const Context& ctx) {
  if (!f) throw std::invalid_argument("eval_formula: null formula");
  switch (f->kind) {
    case Formula::Kind::Top:
      return top_pred(T, context_product(ctx));
    case Formula::Kind::Bot:
      return bot_pred(T, context_product(ctx));
    case Formula::Kind::Atomic:
      return reindex(T, f->atom->pred, atom_tupling(*f->atom, ctx));
    case Formula::Kind::And:
      return and_pred(T, eval_formula(T, f->lhs, ctx), eval_formula(T, f->rhs, ctx));
    case Formula::Kind::Or:
      return or_pred(T, eval_formula(T, f->lhs, ctx), eval_formula(T, f->rhs, ctx));
    case Formula::Kind::Imp:
      return imp_pred(T, eval_formula(T, f->lhs, ctx), eval_formula(T, f->rhs, ctx));
    case Formula::Kind::Iff: {
      Predicate a = eval_formula(T, f->lhs, ctx);
      Predicate b = eval_formula(T, f->rhs, ctx);
      return and_pred(T, imp_pred(T, a, b), imp_pred(T, b, a));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      Context extended = ctx;
      extended.push_back({f->var, f->sort});
      Predicate body = eval_formula(T, f->body, extended);
      FinMap proj = drop_last(extended);
      return f->kind == Formula::Kind::Forall ? forall_along(T, proj, body)
                                              : exists_along(T, proj, body);
    }
  }
  throw std::logic_error("eval_formula: unreachable");
}

bool formula_holds(const TriposInstance& T, const FormulaPtr& f) {
  Predicate value = eval_formula(T, f, {});
  return equiv(T, value, top_pred(T, FinSet(1)));
}

std::string formula_str(const FormulaPtr& f) {
  if (!f) return "<null>";
  switch (f->kind) {
    case Formula::Kind::Top:
      return "true";
    case Formula::Kind::Bot:
      return "false";
    case Formula::Kind::Atomic: {
      std::string s = "(pred";
      for (const std::string& a : f->atom->args) s += " " + a;
      return s + ")";
    }
    case Formula::Kind::And:
      return "(and " + formula_str(f->lhs) + " " + formula_str(f->rhs) + ")";
    case Formula::Kind::Or:
      return "(or " + formula_str(f->lhs) + " " + formula_str(f->rhs) + ")";
    case Formula::Kind::Imp:
      return "(imp " + formula_str(f->lhs) + " " + formula_str(f->rhs) + ")";
    case Formula::Kind::Iff:
      return "(iff " + formula_str(f->lhs) + " " + formula_str(f->rhs) + ")";
    case Formula::Kind::Forall:
      return "(forall (" + f->var + " " + std::to_string(f->sort.size) + ") " +
             formula_str(f->body) + ")";
    case Formula::Kind::Exists:
      return "(exists (" + f->var + " " + std::to_string(f->sort.size) + ") " +
             formula_str(f->body) + ")";
  }
  return "<unknown>";
}

}  // namespace tripos
