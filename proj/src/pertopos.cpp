#include "tripos/pertopos.hpp"

#include <stdexcept>

namespace tripos {

namespace {

FormulaPtr sym_formula(const PerObject& X) {
  return f_forall("x", X.index,
                  f_forall("y", X.index,
                           f_imp(f_atom(X.eq, {X.index, X.index}, {"x", "y"}),
                                 f_atom(X.eq, {X.index, X.index}, {"y", "x"}))));
}

FormulaPtr trans_formula(const PerObject& X) {
  FormulaPtr body = f_imp(f_and(f_atom(X.eq, {X.index, X.index}, {"x", "y"}),
                                f_atom(X.eq, {X.index, X.index}, {"y", "z"})),
                          f_atom(X.eq, {X.index, X.index}, {"x", "z"}));
  return f_forall("x", X.index, f_forall("y", X.index, f_forall("z", X.index, body)));
}

}  // namespace

InternalCheck validate_per(const TriposInstance& T, const PerObject& X) {
  InternalCheck out;
  if (!(X.eq.index == product_object(X.index, X.index)))
    throw std::invalid_argument("validate_per: eq must live over index x index");
  if (!formula_holds(T, sym_formula(X))) {
    out.valid = false;
    out.failures.push_back("symmetry");
  }
  if (!formula_holds(T, trans_formula(X))) {
    out.valid = false;
    out.failures.push_back("transitivity");
  }
  return out;
}

InternalCheck validate_funrel(const TriposInstance& T, const FunRel& F) {
  InternalCheck out;
  const FinSet& X = F.src.index;
  const FinSet& Y = F.tgt.index;
  if (!(F.rel.index == product_object(X, Y)))
    throw std::invalid_argument("validate_funrel: rel must live over src x tgt");
  auto rel = [&](const char* a, const char* b) { return f_atom(F.rel, {X, Y}, {a, b}); };
  auto eqs = [&](const char* a, const char* b) { return f_atom(F.src.eq, {X, X}, {a, b}); };
  auto eqt = [&](const char* a, const char* b) { return f_atom(F.tgt.eq, {Y, Y}, {a, b}); };

  FormulaPtr strict = f_forall(
      "x", X, f_forall("y", Y, f_imp(rel("x", "y"), f_and(eqs("x", "x"), eqt("y", "y")))));
  if (!formula_holds(T, strict)) {
    out.valid = false;
    out.failures.push_back("strictness");
  }

  FormulaPtr relational = f_forall(
      "x", X,
      f_forall("x2", X,
               f_forall("y", Y,
                        f_forall("y2", Y,
                                 f_imp(f_and(rel("x", "y"),
                                             f_and(f_atom(F.src.eq, {X, X}, {"x", "x2"}),
                                                   f_atom(F.tgt.eq, {Y, Y}, {"y", "y2"}))),
                                       rel("x2", "y2"))))));
  if (!formula_holds(T, relational)) {
    out.valid = false;
    out.failures.push_back("relationality");
  }

  FormulaPtr single = f_forall(
      "x", X,
      f_forall("y", Y,
               f_forall("y2", Y,
                        f_imp(f_and(rel("x", "y"), rel("x", "y2")), eqt("y", "y2")))));
  if (!formula_holds(T, single)) {
    out.valid = false;
    out.failures.push_back("single-valuedness");
  }

  FormulaPtr total =
      f_forall("x", X, f_imp(eqs("x", "x"), f_exists("y", Y, rel("x", "y"))));
  if (!formula_holds(T, total)) {
    out.valid = false;
    out.failures.push_back("totality");
  }
  return out;
}

bool funrel_equal(const TriposInstance& T, const FunRel& F, const FunRel& G) {
  if (!(F.src.index == G.src.index) || !(F.tgt.index == G.tgt.index)) return false;
  return equiv(T, F.rel, G.rel);
}

FunRel identity_funrel(const PerObject& X) { return FunRel{X, X, X.eq}; }

FunRel compose_funrel(const TriposInstance& T, const FunRel& F, const FunRel& G) {
  if (!(F.tgt.index == G.src.index))
    throw std::invalid_argument("compose_funrel: boundary mismatch");
  const FinSet& X = F.src.index;
  const FinSet& Y = F.tgt.index;
  const FinSet& Z = G.tgt.index;
  std::vector<FinSet> shape{X, Y, Z};
  Predicate joint = and_pred(T, reindex(T, F.rel, select_coords(shape, {0, 1})),
                             reindex(T, G.rel, select_coords(shape, {1, 2})));
  FunRel out{F.src, G.tgt, exists_along(T, select_coords(shape, {0, 2}), joint)};
  InternalCheck check = validate_funrel(T, out);
  if (!check.valid)
    throw std::logic_error("compose_funrel: composite failed validation (" + check.failures[0] +
                           ")");
  return out;
}

PerObject delta_obj(const TriposInstance& T, const FinSet& I) {
  FinSet prod = product_object(I, I);
  std::vector<bool> diag(static_cast<size_t>(prod.size), false);
  for (int i = 0; i < I.size; ++i) diag[static_cast<size_t>(pair_encode(i, i, I.size))] = true;
  return PerObject{I, pointwise_predicate(T, Subobject(prod, std::move(diag)))};
}

FunRel delta_map(const TriposInstance& T, const FinMap& u) {
  FinSet prod = product_object(u.dom, u.cod);
  std::vector<bool> graph(static_cast<size_t>(prod.size), false);
  for (int i = 0; i < u.dom.size; ++i)
    graph[static_cast<size_t>(pair_encode(i, u(i), u.cod.size))] = true;
  return FunRel{delta_obj(T, u.dom), delta_obj(T, u.cod),
                pointwise_predicate(T, Subobject(prod, std::move(graph)))};
}

PerObject per_product(const TriposInstance& T, const PerObject& X, const PerObject& Y) {
  std::vector<FinSet> shape{X.index, Y.index, X.index, Y.index};
  Predicate eq = and_pred(T, reindex(T, X.eq, select_coords(shape, {0, 2})),
                          reindex(T, Y.eq, select_coords(shape, {1, 3})));
  return PerObject{product_object(X.index, Y.index), std::move(eq)};
}

FunRel pair_funrel(const TriposInstance& T, const FunRel& F, const FunRel& G) {
  if (!(F.src.index == G.src.index))
    throw std::invalid_argument("pair_funrel: sources must agree");
  std::vector<FinSet> shape{F.src.index, F.tgt.index, G.tgt.index};
  Predicate rel = and_pred(T, reindex(T, F.rel, select_coords(shape, {0, 1})),
                           reindex(T, G.rel, select_coords(shape, {0, 2})));
  return FunRel{F.src, per_product(T, F.tgt, G.tgt), std::move(rel)};
}

bool funrel_internal_epi(const TriposInstance& T, const FunRel& F) {
  const FinSet& X = F.src.index;
  const FinSet& Y = F.tgt.index;
  FormulaPtr f = f_forall("y", Y,
                          f_imp(f_atom(F.tgt.eq, {Y, Y}, {"y", "y"}),
                                f_exists("x", X, f_atom(F.rel, {X, Y}, {"x", "y"}))));
  return formula_holds(T, f);
}

bool funrel_internal_mono(const TriposInstance& T, const FunRel& F) {
  const FinSet& X = F.src.index;
  const FinSet& Y = F.tgt.index;
  FormulaPtr f = f_forall(
      "x", X,
      f_forall("x2", X,
               f_forall("y", Y, f_imp(f_and(f_atom(F.rel, {X, Y}, {"x", "y"}),
                                            f_atom(F.rel, {X, Y}, {"x2", "y"})),
                                      f_atom(F.src.eq, {X, X}, {"x", "x2"})))));
  return formula_holds(T, f);
}

std::vector<PerObject> enumerate_pers(const TriposInstance& T, int max_index) {
  std::vector<PerObject> out;
  for (int isize = 0; isize <= max_index; ++isize) {
    FinSet I(isize);
    FinSet prod = product_object(I, I);
    long long total = fiber_size(T, prod);
    for (long long k = 0; k < total; ++k) {
      PerObject cand{I, fiber_element(T, prod, k)};
      if (validate_per(T, cand).valid) out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<FunRel> enumerate_funrels(const TriposInstance& T, const PerObject& X,
                                      const PerObject& Y) {
  std::vector<FunRel> out;
  FinSet prod = product_object(X.index, Y.index);
  long long total = fiber_size(T, prod);
  for (long long k = 0; k < total; ++k) {
    FunRel cand{X, Y, fiber_element(T, prod, k)};
    if (validate_funrel(T, cand).valid) out.push_back(std::move(cand));
  }
  return out;
}

LawSuiteResult run_per_category_suite(const TriposInstance& T, int max_index, int max_map_size) {
  LawSuiteResult result;
  std::vector<PerObject> objects = enumerate_pers(T, max_index);
  size_t n = objects.size();
  std::vector<std::vector<std::vector<FunRel>>> hom(n, std::vector<std::vector<FunRel>>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) hom[a][b] = enumerate_funrels(T, objects[a], objects[b]);

  auto sweep = [&](const std::string& law, auto&& body) {
    LawSweep s{law, 0, std::nullopt};
    body(s);
    result.sweeps.push_back(std::move(s));
  };
  auto fail = [](LawSweep& s, const std::string& msg) {
    if (!s.failure) s.failure = msg;
  };

  sweep("identity-units", [&](LawSweep& s) {
    for (size_t a = 0; a < n; ++a) {
      FunRel ida = identity_funrel(objects[a]);
      if (!validate_funrel(T, ida).valid) return fail(s, "identity not a morphism");
      for (size_t b = 0; b < n; ++b)
        for (const FunRel& f : hom[a][b]) {
          ++s.cases;
          if (!funrel_equal(T, compose_funrel(T, ida, f), f))
            return fail(s, "left unit fails at " + pred_str(f.rel));
          if (!funrel_equal(T, compose_funrel(T, f, identity_funrel(objects[b])), f))
            return fail(s, "right unit fails at " + pred_str(f.rel));
        }
    }
  });

  sweep("associativity", [&](LawSweep& s) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          for (size_t d = 0; d < n; ++d)
            for (const FunRel& f : hom[a][b])
              for (const FunRel& g : hom[b][c])
                for (const FunRel& h : hom[c][d]) {
                  ++s.cases;
                  FunRel left = compose_funrel(T, compose_funrel(T, f, g), h);
                  FunRel right = compose_funrel(T, f, compose_funrel(T, g, h));
                  if (!funrel_equal(T, left, right))
                    return fail(s, "associativity fails at " + pred_str(f.rel) + " " +
                                       pred_str(g.rel) + " " + pred_str(h.rel));
                }
  });

  sweep("delta-functorial", [&](LawSweep& s) {
    for (int a = 0; a <= max_map_size; ++a) {
      FinSet I(a);
      ++s.cases;
      if (!funrel_equal(T, delta_map(T, identity_map(I)), identity_funrel(delta_obj(T, I))))
        return fail(s, "delta of id differs from identity at |I|=" + std::to_string(a));
    }
    for (int a = 0; a <= max_map_size; ++a)
      for (int b = 0; b <= max_map_size; ++b)
        for (int c = 0; c <= max_map_size; ++c)
          for (const FinMap& u : all_maps(FinSet(a), FinSet(b)))
            for (const FinMap& v : all_maps(FinSet(b), FinSet(c))) {
              ++s.cases;
              FunRel lhs = delta_map(T, compose(u, v));
              FunRel rhs = compose_funrel(T, delta_map(T, u), delta_map(T, v));
              if (!funrel_equal(T, lhs, rhs))
                return fail(s, "delta does not preserve composition at sizes " +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c));
            }
  });

  sweep("epi-mono-vs-cancellation", [&](LawSweep& s) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (const FunRel& f : hom[a][b]) {
          bool internal_epi = funrel_internal_epi(T, f);
          bool cancel_epi = true;
          for (size_t c = 0; c < n && cancel_epi; ++c)
            for (size_t gi = 0; gi < hom[b][c].size() && cancel_epi; ++gi)
              for (size_t hi = gi + 1; hi < hom[b][c].size() && cancel_epi; ++hi) {
                const FunRel& g = hom[b][c][gi];
                const FunRel& h = hom[b][c][hi];
                if (funrel_equal(T, compose_funrel(T, f, g), compose_funrel(T, f, h)) &&
                    !funrel_equal(T, g, h))
                  cancel_epi = false;
              }
          ++s.cases;
          if (internal_epi != cancel_epi)
            return fail(s, "epi characterizations disagree at " + pred_str(f.rel));

          bool internal_mono = funrel_internal_mono(T, f);
          bool cancel_mono = true;
          for (size_t c = 0; c < n && cancel_mono; ++c)
            for (size_t gi = 0; gi < hom[c][a].size() && cancel_mono; ++gi)
              for (size_t hi = gi + 1; hi < hom[c][a].size() && cancel_mono; ++hi) {
                const FunRel& g = hom[c][a][gi];
                const FunRel& h = hom[c][a][hi];
                if (funrel_equal(T, compose_funrel(T, g, f), compose_funrel(T, h, f)) &&
                    !funrel_equal(T, g, h))
                  cancel_mono = false;
              }
          ++s.cases;
          if (internal_mono != cancel_mono)
            return fail(s, "mono characterizations disagree at " + pred_str(f.rel));
        }
  });

  sweep("subquotient-witnesses", [&](LawSweep& s) {
    for (const PerObject& A : objects) {
      ++s.cases;
      SubquotientWitness w = subquotient_witness(T, A);
      if (w.verdict != Verdict::HoldsWithinBounds)
        return fail(s, "subquotient witness fails at " + pred_str(A.eq));
    }
  });

  return result;
}

DeltaLimitsResult check_delta_limits(const TriposInstance& T, int max_index, const FinSet& I,
                                     const FinSet& J) {
  DeltaLimitsResult out;
  std::vector<PerObject> objects = enumerate_pers(T, max_index);

  // Terminality of Delta(1): exactly one morphism from every capped PER.
  PerObject one = delta_obj(T, FinSet(1));
  for (const PerObject& X : objects) {
    std::vector<FunRel> into = enumerate_funrels(T, X, one);
    long long classes = 0;
    for (size_t i = 0; i < into.size(); ++i) {
      bool fresh = true;
      for (size_t j = 0; j < i; ++j)
        if (funrel_equal(T, into[i], into[j])) fresh = false;
      if (fresh) ++classes;
    }
    ++out.cones_checked;
    if (classes != 1) {
      out.verdict = Verdict::Fails;
      out.detail = "Delta(1) admits " + std::to_string(classes) + " morphisms from " +
                   pred_str(X.eq);
      return out;
    }
  }

  // Delta(I x J) with the Delta projections is a product cone.
  PerObject apex = delta_obj(T, product_object(I, J));
  PerObject di = delta_obj(T, I);
  PerObject dj = delta_obj(T, J);
  FunRel p1 = delta_map(T, product_proj1(I, J));
  FunRel p2 = delta_map(T, product_proj2(I, J));
  for (const PerObject& X : objects) {
    std::vector<FunRel> to_i = enumerate_funrels(T, X, di);
    std::vector<FunRel> to_j = enumerate_funrels(T, X, dj);
    std::vector<FunRel> to_apex = enumerate_funrels(T, X, apex);
    for (const FunRel& f : to_i)
      for (const FunRel& g : to_j) {
        ++out.cones_checked;
        std::vector<const FunRel*> meds;
        for (const FunRel& h : to_apex)
          if (funrel_equal(T, compose_funrel(T, h, p1), f) &&
              funrel_equal(T, compose_funrel(T, h, p2), g))
            meds.push_back(&h);
        long long mediating = 0;
        for (size_t i = 0; i < meds.size(); ++i) {
          bool fresh = true;
          for (size_t j = 0; j < i; ++j)
            if (funrel_equal(T, *meds[i], *meds[j])) fresh = false;
          if (fresh) ++mediating;
        }
        if (mediating != 1) {
          out.verdict = Verdict::Fails;
          out.detail = "cone over (" + pred_str(f.rel) + ", " + pred_str(g.rel) + ") has " +
                       std::to_string(mediating) + " mediating morphisms";
          return out;
        }
      }
  }
  return out;
}

SubquotientWitness subquotient_witness(const TriposInstance& T, const PerObject& A) {
  SubquotientWitness out;
  out.index = A.index;
  const FinSet& I = A.index;

  // C: underlying set with equality cut to the diagonal of A's domain.
  PerObject diag = delta_obj(T, I);
  PerObject c{I, and_pred(T, diag.eq, A.eq)};
  out.c = c;
  out.epi = FunRel{c, A, A.eq};
  out.mono = FunRel{c, diag, c.eq};

  bool c_ok = validate_per(T, c).valid;
  bool e_ok = validate_funrel(T, out.epi).valid;
  bool m_ok = validate_funrel(T, out.mono).valid;
  out.epi_internal = funrel_internal_epi(T, out.epi);
  out.mono_internal = funrel_internal_mono(T, out.mono);
  out.verdict = (c_ok && e_ok && m_ok && out.epi_internal && out.mono_internal)
                    ? Verdict::HoldsWithinBounds
                    : Verdict::Fails;
  return out;
}

}  // namespace tripos
