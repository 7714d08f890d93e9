#include "tripos/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tripos {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, line});
      cur.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
      continue;
    }
    if (c == '[' || c == ']' || c == '(' || c == ')') {
      flush();
      out.push_back({std::string(1, c), line});
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

struct Cursor {
  const std::vector<Token>& toks;
  size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool accept(const std::string& t) {
    if (!done() && toks[pos].text == t) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string where() const {
    return done() ? "end of input" : "line " + std::to_string(toks[pos].line);
  }
};

template <typename T>
Expected<T> parse_error(const std::string& msg, const Cursor& c) {
  return Expected<T>::failure(msg + " at " + c.where());
}

}  // namespace

Expected<ImplicativeAlgebra> parse_algebra(const std::string& text) {
  using Result = Expected<ImplicativeAlgebra>;
  std::vector<Token> toks = tokenize(text);
  Cursor c{toks};

  std::vector<std::string> names;
  std::map<std::string, int> index_of;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> imp;
  std::vector<int> gens;
  bool saw_elements = false, saw_leq = false, saw_imp = false, saw_separator = false;

  auto element = [&](const Token& t) -> int {
    auto it = index_of.find(t.text);
    return it == index_of.end() ? -1 : it->second;
  };

  while (!c.done()) {
    Token kw = c.next();
    if (kw.text == "elements") {
      if (saw_elements) return Result::failure("duplicate elements block at line " + std::to_string(kw.line));
      saw_elements = true;
      if (!c.accept("[")) return parse_error<ImplicativeAlgebra>("expected '[' after elements", c);
      while (!c.accept("]")) {
        if (c.done()) return parse_error<ImplicativeAlgebra>("unterminated elements block", c);
        Token t = c.next();
        if (index_of.count(t.text))
          return Result::failure("duplicate element '" + t.text + "' at line " + std::to_string(t.line));
        index_of[t.text] = static_cast<int>(names.size());
        names.push_back(t.text);
      }
    } else if (kw.text == "leq") {
      if (!saw_elements) return Result::failure("leq before elements at line " + std::to_string(kw.line));
      saw_leq = true;
      if (!c.accept("[")) return parse_error<ImplicativeAlgebra>("expected '[' after leq", c);
      while (!c.accept("]")) {
        if (!c.accept("(")) return parse_error<ImplicativeAlgebra>("expected '(' in leq pair", c);
        if (c.done()) return parse_error<ImplicativeAlgebra>("unterminated leq pair", c);
        Token a = c.next();
        if (c.done()) return parse_error<ImplicativeAlgebra>("unterminated leq pair", c);
        Token b = c.next();
        if (!c.accept(")")) return parse_error<ImplicativeAlgebra>("expected ')' in leq pair", c);
        int ia = element(a), ib = element(b);
        if (ia < 0) return Result::failure("unknown element '" + a.text + "' at line " + std::to_string(a.line));
        if (ib < 0) return Result::failure("unknown element '" + b.text + "' at line " + std::to_string(b.line));
        pairs.emplace_back(ia, ib);
      }
    } else if (kw.text == "imp") {
      saw_imp = true;
      if (!c.accept("[")) return parse_error<ImplicativeAlgebra>("expected '[' after imp", c);
      while (!c.accept("]")) {
        if (!c.accept("[")) return parse_error<ImplicativeAlgebra>("expected '[' for imp row", c);
        std::vector<int> row;
        while (!c.accept("]")) {
          if (c.done()) return parse_error<ImplicativeAlgebra>("unterminated imp row", c);
          Token t = c.next();
          int v = element(t);
          if (v < 0) return Result::failure("unknown element '" + t.text + "' at line " + std::to_string(t.line));
          row.push_back(v);
        }
        imp.push_back(std::move(row));
      }
    } else if (kw.text == "separator") {
      saw_separator = true;
      if (!c.accept("[")) return parse_error<ImplicativeAlgebra>("expected '[' after separator", c);
      while (!c.accept("]")) {
        if (c.done()) return parse_error<ImplicativeAlgebra>("unterminated separator block", c);
        Token t = c.next();
        int v = element(t);
        if (v < 0) return Result::failure("unknown element '" + t.text + "' at line " + std::to_string(t.line));
        gens.push_back(v);
      }
    } else {
      return Result::failure("unknown keyword '" + kw.text + "' at line " + std::to_string(kw.line));
    }
  }

  if (!saw_elements) return Result::failure("missing elements block");
  if (!saw_leq) return Result::failure("missing leq block");
  int n = static_cast<int>(names.size());
  if (n == 0) return Result::failure("empty element list");

  // Reflexive-transitive closure of the order generators.
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a) leq[static_cast<size_t>(a)][static_cast<size_t>(a)] = true;
  for (auto [a, b] : pairs) leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq[static_cast<size_t>(a)][static_cast<size_t>(k)] &&
            leq[static_cast<size_t>(k)][static_cast<size_t>(b)])
          leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;

  Expected<FinLattice> lat = validate_lattice(FinSet(n, names), leq);
  if (!lat) return Result::failure(lat.error());

  Expected<ImplicativeStructure> structure = [&]() -> Expected<ImplicativeStructure> {
    if (saw_imp) {
      if (static_cast<int>(imp.size()) != n)
        return Expected<ImplicativeStructure>::failure("imp table must have one row per element");
      return validate_implicative(*lat, imp);
    }
    Expected<HeytingAlg> hey = heyting_from_order(*lat);
    if (!hey) return Expected<ImplicativeStructure>::failure(hey.error());
    return validate_implicative(hey->lattice, hey->imp);
  }();
  if (!structure) return Result::failure(structure.error());

  std::vector<bool> genmask(static_cast<size_t>(n), false);
  for (int g : gens) genmask[static_cast<size_t>(g)] = true;
  (void)saw_separator;  // absent block = least separator
  Separator sep = separator_closure(*structure, genmask);
  return ImplicativeAlgebra{*structure, sep};
}

std::string serialize_algebra(const ImplicativeAlgebra& alg) {
  const FinLattice& L = alg.structure.lattice;
  int n = L.size();
  std::ostringstream out;
  out << "elements [";
  for (int a = 0; a < n; ++a) out << (a ? " " : "") << L.name(a);
  out << "]\nleq [";
  bool first = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && L.le(a, b)) {
        out << (first ? "" : " ") << "(" << L.name(a) << "," << L.name(b) << ")";
        first = false;
      }
  out << "]\nimp [";
  for (int a = 0; a < n; ++a) {
    out << (a ? " [" : "[");
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << L.name(alg.structure.arrow(a, b));
    out << "]";
  }
  out << "]\nseparator [";
  first = true;
  for (int a = 0; a < n; ++a)
    if (alg.separator.contains(a)) {
      out << (first ? "" : " ") << L.name(a);
      first = false;
    }
  out << "]\n";
  return out.str();
}

Expected<PredicateBinding> parse_predicate_binding(const TriposInstance& T,
                                                   const std::string& spec) {
  using Result = Expected<PredicateBinding>;
  std::vector<FinSet> shape;
  std::string mask, table;
  std::istringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) {
    size_t eq = part.find('=');
    if (eq == std::string::npos) return Result::failure("expected key=value in '" + part + "'");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "shape") {
      std::istringstream vs(val);
      std::string dim;
      while (std::getline(vs, dim, 'x')) {
        try {
          shape.emplace_back(std::stoi(dim));
        } catch (...) {
          return Result::failure("bad shape dimension '" + dim + "'");
        }
      }
    } else if (key == "mask") {
      mask = val;
    } else if (key == "table") {
      table = val;
    } else {
      return Result::failure("unknown key '" + key + "'");
    }
  }
  if (shape.empty()) return Result::failure("missing shape");
  long long prod = 1;
  for (const FinSet& s : shape) prod *= s.size;
  FinSet index(static_cast<int>(prod));

  if (T.is_power()) {
    if (mask.empty()) return Result::failure("power flavor needs mask=");
    FinSet amb = f_object(T, index);
    if (static_cast<int>(mask.size()) != amb.size)
      return Result::failure("mask length " + std::to_string(mask.size()) + " != |F(index)| = " +
                             std::to_string(amb.size));
    std::vector<bool> bits(static_cast<size_t>(amb.size));
    for (size_t i = 0; i < mask.size(); ++i) {
      if (mask[i] != '0' && mask[i] != '1') return Result::failure("mask must be 0/1");
      bits[i] = mask[i] == '1';
    }
    return PredicateBinding{Predicate{index, Subobject(amb, std::move(bits))}, std::move(shape)};
  }
  if (table.empty()) return Result::failure("implicative flavor needs table=");
  std::vector<int> tab;
  std::istringstream ts(table);
  std::string cell;
  while (std::getline(ts, cell, ',')) {
    try {
      tab.push_back(std::stoi(cell));
    } catch (...) {
      return Result::failure("bad table entry '" + cell + "'");
    }
  }
  if (static_cast<int>(tab.size()) != index.size)
    return Result::failure("table length != index size");
  int a_size = T.algebra->structure.size();
  for (int v : tab)
    if (v < 0 || v >= a_size) return Result::failure("table entry out of algebra range");
  return PredicateBinding{Predicate{index, std::move(tab)}, std::move(shape)};
}

namespace {

struct FormulaParser {
  Cursor c;
  const PredicateEnv& env;
  std::vector<std::pair<std::string, FinSet>> scope;

  Expected<FormulaPtr> parse() {
    using Result = Expected<FormulaPtr>;
    if (c.done()) return parse_error<FormulaPtr>("unexpected end of formula", c);
    if (c.accept("true")) return f_top();
    if (c.accept("false")) return f_bot();
    if (!c.accept("(")) return parse_error<FormulaPtr>("expected '(', 'true' or 'false'", c);
    if (c.done()) return parse_error<FormulaPtr>("unexpected end after '('", c);
    Token head = c.next();
    if (head.text == "and" || head.text == "or" || head.text == "imp" || head.text == "iff") {
      Expected<FormulaPtr> a = parse();
      if (!a) return a;
      Expected<FormulaPtr> b = parse();
      if (!b) return b;
      if (!c.accept(")")) return parse_error<FormulaPtr>("expected ')'", c);
      if (head.text == "and") return f_and(*a, *b);
      if (head.text == "or") return f_or(*a, *b);
      if (head.text == "imp") return f_imp(*a, *b);
      return f_iff(*a, *b);
    }
    if (head.text == "forall" || head.text == "exists") {
      if (!c.accept("(")) return parse_error<FormulaPtr>("expected '(var N)' binder", c);
      if (c.done()) return parse_error<FormulaPtr>("unterminated binder", c);
      Token var = c.next();
      if (c.done()) return parse_error<FormulaPtr>("binder missing sort size", c);
      Token size = c.next();
      int n;
      try {
        n = std::stoi(size.text);
      } catch (...) {
        return Result::failure("bad sort size '" + size.text + "' at line " +
                               std::to_string(size.line));
      }
      if (n < 0) return Result::failure("negative sort size at line " + std::to_string(size.line));
      if (!c.accept(")")) return parse_error<FormulaPtr>("expected ')' after binder", c);
      scope.emplace_back(var.text, FinSet(n));
      Expected<FormulaPtr> body = parse();
      scope.pop_back();
      if (!body) return body;
      if (!c.accept(")")) return parse_error<FormulaPtr>("expected ')'", c);
      return head.text == "forall" ? f_forall(var.text, FinSet(n), *body)
                                   : f_exists(var.text, FinSet(n), *body);
    }
    if (head.text == "pred") {
      if (c.done()) return parse_error<FormulaPtr>("pred needs a name", c);
      Token name = c.next();
      auto it = env.find(name.text);
      if (it == env.end())
        return Result::failure("unknown predicate '" + name.text + "' at line " +
                               std::to_string(name.line));
      std::vector<std::string> args;
      while (!c.accept(")")) {
        if (c.done()) return parse_error<FormulaPtr>("unterminated pred", c);
        args.push_back(c.next().text);
      }
      if (args.size() != it->second.shape.size())
        return Result::failure("predicate '" + name.text + "' expects " +
                               std::to_string(it->second.shape.size()) + " arguments");
      for (size_t k = 0; k < args.size(); ++k) {
        bool found = false;
        for (auto sit = scope.rbegin(); sit != scope.rend(); ++sit)
          if (sit->first == args[k]) {
            if (!(sit->second == it->second.shape[k]))
              return Result::failure("variable '" + args[k] + "' has the wrong sort for '" +
                                     name.text + "'");
            found = true;
            break;
          }
        if (!found) return Result::failure("unbound variable '" + args[k] + "'");
      }
      return f_atom(it->second.pred, it->second.shape, args);
    }
    return Result::failure("unknown form '" + head.text + "' at line " +
                           std::to_string(head.line));
  }
};

}  // namespace

Expected<FormulaPtr> parse_formula(const std::string& text, const PredicateEnv& env) {
  std::vector<Token> toks = tokenize(text);
  FormulaParser p{Cursor{toks}, env, {}};
  Expected<FormulaPtr> f = p.parse();
  if (f && !p.c.done())
    return Expected<FormulaPtr>::failure("trailing tokens at " + p.c.where());
  return f;
}

std::vector<std::string> builtin_algebra_names() { return {"bool2", "chain3", "chain4", "bool4"}; }

Expected<ImplicativeAlgebra> builtin_algebra(const std::string& name) {
  using Result = Expected<ImplicativeAlgebra>;
  FinLattice lat;
  if (name == "bool2")
    lat = chain_lattice(2);
  else if (name == "chain3")
    lat = chain_lattice(3);
  else if (name == "chain4")
    lat = chain_lattice(4);
  else if (name == "bool4")
    lat = boolean_lattice(2);
  else
    return Result::failure("unknown builtin algebra '" + name + "'");
  Expected<HeytingAlg> hey = heyting_from_order(lat);
  if (!hey) return Result::failure(hey.error());
  return from_heyting(*hey, top_only(lat));
}

}  // namespace tripos
