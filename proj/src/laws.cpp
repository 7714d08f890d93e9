#include "tripos/laws.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tripos {

bool LawSuiteResult::all_hold() const {
  for (const LawSweep& s : sweeps)
    if (s.failure) return false;
  return true;
}

long long LawSuiteResult::total_cases() const {
  long long n = 0;
  for (const LawSweep& s : sweeps) n += s.cases;
  return n;
}

std::string LawSuiteResult::first_failure() const {
  for (const LawSweep& s : sweeps)
    if (s.failure) return s.law + ": " + *s.failure;
  return "";
}

LawSuiteResult run_law_suite(const TriposInstance& T, const LawCaps& caps) {
  LawSuiteResult result;
  std::vector<FinSet> objs;
  for (int s = 0; s <= caps.max_obj; ++s) objs.emplace_back(s);

  std::vector<std::vector<Predicate>> fibers;
  fibers.reserve(objs.size());
  for (const FinSet& I : objs) fibers.push_back(fiber_enumerate(T, I));

  auto sweep = [&](const std::string& law, auto&& body) {
    LawSweep s{law, 0, std::nullopt};
    body(s);
    result.sweeps.push_back(std::move(s));
  };

  auto fail = [](LawSweep& s, const std::string& msg) {
    if (!s.failure) s.failure = msg;
  };

  sweep("preorder", [&](LawSweep& s) {
    for (size_t oi = 0; oi < objs.size(); ++oi) {
      const auto& fib = fibers[oi];
      for (const Predicate& a : fib) {
        ++s.cases;
        if (!entails(T, a, a)) return fail(s, "reflexivity fails at " + pred_str(a));
      }
      for (const Predicate& a : fib)
        for (const Predicate& b : fib)
          for (const Predicate& c : fib) {
            ++s.cases;
            if (entails(T, a, b) && entails(T, b, c) && !entails(T, a, c))
              return fail(s, "transitivity fails at " + pred_str(a) + " " + pred_str(b) + " " +
                                 pred_str(c));
          }
    }
  });

  sweep("reindex-functorial", [&](LawSweep& s) {
    for (const FinSet& I : objs) {
      // identity law
      FinMap id = identity_map(I);
      for (const Predicate& p : fibers[static_cast<size_t>(I.size)]) {
        ++s.cases;
        if (!(reindex(T, p, id) == p)) return fail(s, "reindex along id changed " + pred_str(p));
      }
    }
    for (const FinSet& I : objs)
      for (const FinSet& J : objs)
        for (const FinSet& K : objs)
          for (const FinMap& u : all_maps(I, J))
            for (const FinMap& v : all_maps(J, K))
              for (const Predicate& p : fibers[static_cast<size_t>(K.size)]) {
                ++s.cases;
                Predicate two_step = reindex(T, reindex(T, p, v), u);
                Predicate one_step = reindex(T, p, compose(u, v));
                if (!(two_step == one_step))
                  return fail(s, "functoriality fails for " + pred_str(p));
              }
  });

  sweep("reindex-monotone", [&](LawSweep& s) {
    for (const FinSet& I : objs)
      for (const FinSet& J : objs)
        for (const FinMap& u : all_maps(I, J))
          for (const Predicate& a : fibers[static_cast<size_t>(J.size)])
            for (const Predicate& b : fibers[static_cast<size_t>(J.size)]) {
              ++s.cases;
              if (entails(T, a, b) && !entails(T, reindex(T, a, u), reindex(T, b, u)))
                return fail(s, "monotonicity fails at " + pred_str(a) + " |- " + pred_str(b));
            }
  });

  sweep("heyting-meet-join", [&](LawSweep& s) {
    for (size_t oi = 0; oi < objs.size(); ++oi) {
      const auto& fib = fibers[oi];
      const FinSet& I = objs[oi];
      Predicate top = top_pred(T, I);
      Predicate bot = bot_pred(T, I);
      for (const Predicate& a : fib) {
        ++s.cases;
        if (!entails(T, a, top)) return fail(s, "top not greatest at " + pred_str(a));
        if (!entails(T, bot, a)) return fail(s, "bottom not least at " + pred_str(a));
      }
      for (const Predicate& a : fib)
        for (const Predicate& b : fib) {
          Predicate m = and_pred(T, a, b);
          Predicate j = or_pred(T, a, b);
          ++s.cases;
          if (!entails(T, m, a) || !entails(T, m, b))
            return fail(s, "meet not a lower bound at " + pred_str(a) + " " + pred_str(b));
          if (!entails(T, a, j) || !entails(T, b, j))
            return fail(s, "join not an upper bound at " + pred_str(a) + " " + pred_str(b));
          for (const Predicate& c : fib) {
            ++s.cases;
            if (entails(T, c, a) && entails(T, c, b) && !entails(T, c, m))
              return fail(s, "meet not greatest at " + pred_str(c));
            if (entails(T, a, c) && entails(T, b, c) && !entails(T, j, c))
              return fail(s, "join not least at " + pred_str(c));
          }
        }
    }
  });

  sweep("heyting-imp-adjunction", [&](LawSweep& s) {
    for (size_t oi = 0; oi < objs.size(); ++oi) {
      const auto& fib = fibers[oi];
      for (const Predicate& rho : fib)
        for (const Predicate& a : fib)
          for (const Predicate& b : fib) {
            ++s.cases;
            bool direct = entails(T, rho, imp_pred(T, a, b));
            bool meet_side = entails(T, and_pred(T, rho, a), b);
            if (direct != meet_side)
              return fail(s, "imp adjunction fails at " + pred_str(rho) + " " + pred_str(a) +
                                 " " + pred_str(b));
          }
    }
  });

  sweep("quantifier-adjointness", [&](LawSweep& s) {
    for (const FinSet& I : objs)
      for (const FinSet& J : objs)
        for (const FinMap& u : all_maps(I, J))
          for (const Predicate& phi : fibers[static_cast<size_t>(I.size)])
            for (const Predicate& psi : fibers[static_cast<size_t>(J.size)]) {
              ++s.cases;
              bool lhs = entails(T, exists_along(T, u, phi), psi);
              bool rhs = entails(T, phi, reindex(T, psi, u));
              if (lhs != rhs)
                return fail(s, "exists adjointness fails at " + pred_str(phi) + " " +
                                   pred_str(psi));
              bool lhs2 = entails(T, psi, forall_along(T, u, phi));
              bool rhs2 = entails(T, reindex(T, psi, u), phi);
              if (lhs2 != rhs2)
                return fail(s, "forall adjointness fails at " + pred_str(phi) + " " +
                                   pred_str(psi));
            }
  });

  sweep("frobenius", [&](LawSweep& s) {
    for (const FinSet& I : objs)
      for (const FinSet& J : objs)
        for (const FinMap& u : all_maps(I, J))
          for (const Predicate& phi : fibers[static_cast<size_t>(I.size)])
            for (const Predicate& psi : fibers[static_cast<size_t>(J.size)]) {
              ++s.cases;
              Predicate lhs = exists_along(T, u, and_pred(T, phi, reindex(T, psi, u)));
              Predicate rhs = and_pred(T, exists_along(T, u, phi), psi);
              if (!equiv(T, lhs, rhs))
                return fail(s, "frobenius fails at " + pred_str(phi) + " " + pred_str(psi));
            }
  });

  sweep("beck-chevalley", [&](LawSweep& s) {
    for (const FinSet& X : objs)
      for (const FinSet& Y : objs)
        for (const FinSet& Z : objs)
          for (const FinMap& f : all_maps(X, Z))
            for (const FinMap& g : all_maps(Y, Z)) {
              CospanSquare sq = canonical_pullback_square(f, g);
              for (const Predicate& phi : fibers[static_cast<size_t>(X.size)]) {
                ++s.cases;
                BeckChevalleyResult r = beck_chevalley_check(T, sq, phi);
                if (!r.holds) return fail(s, r.counterwitness);
              }
            }
  });

  return result;
}

// ---------------------------------------------------------------------------
// Generic families.
// ---------------------------------------------------------------------------

GenericSearchResult find_generic_family(const TriposInstance& T, int sigma_min, int sigma_max,
                                        int max_index) {
  GenericSearchResult out;
  out.bounds = "sigma in [" + std::to_string(sigma_min) + "," + std::to_string(sigma_max) +
               "], |I| <= " + std::to_string(max_index);
  std::vector<FinSet> indices;
  for (int s = 0; s <= max_index; ++s) indices.emplace_back(s);

  for (int ssize = sigma_min; ssize <= sigma_max; ++ssize) {
    FinSet sigma(ssize);
    // Hoist the per-index data that does not depend on the candidate.
    std::vector<std::vector<FinMap>> maps_to_sigma;
    std::vector<long long> fiber_sizes;
    for (const FinSet& I : indices) {
      maps_to_sigma.push_back(all_maps(I, sigma));
      fiber_sizes.push_back(fiber_size(T, I));
    }
    long long total = fiber_size(T, sigma);
    for (long long k = 0; k < total; ++k) {
      Predicate t = fiber_element(T, sigma, k);
      ++out.candidates_tried;
      bool generic = true;
      for (size_t ii = 0; ii < indices.size() && generic; ++ii) {
        const FinSet& I = indices[ii];
        std::vector<Predicate> obtainable;
        obtainable.reserve(maps_to_sigma[ii].size());
        for (const FinMap& p : maps_to_sigma[ii]) obtainable.push_back(reindex(T, t, p));
        if (T.is_power()) {
          // Mutual entailment is mask equality here, so rank-set coverage
          // decides the fiber in one pass.
          std::vector<long long> ranks;
          ranks.reserve(obtainable.size());
          for (const Predicate& o : obtainable) ranks.push_back(fiber_rank(T, o));
          std::sort(ranks.begin(), ranks.end());
          ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
          generic = static_cast<long long>(ranks.size()) == fiber_sizes[ii];
        } else {
          for (long long fk = 0; fk < fiber_sizes[ii] && generic; ++fk) {
            Predicate phi = fiber_element(T, I, fk);
            bool hit = false;
            for (const Predicate& o : obtainable)
              if (equiv(T, o, phi)) {
                hit = true;
                break;
              }
            generic = hit;
          }
        }
      }
      if (generic) {
        out.found = GenericFamily{sigma, std::move(t)};
        return out;
      }
    }
  }
  return out;
}

WeakGenericResult is_weakly_generic(const TriposInstance& T, const GenericFamily& g,
                                    int max_index, int max_aux) {
  WeakGenericResult out;
  out.bounds = "|I| <= " + std::to_string(max_index) + ", |J| <= " + std::to_string(max_aux);
  for (int isize = 0; isize <= max_index; ++isize) {
    FinSet I(isize);
    long long total = fiber_size(T, I);
    for (long long k = 0; k < total; ++k) {
      Predicate phi = fiber_element(T, I, k);
      bool found = false;
      for (int jsize = 0; jsize <= max_aux && !found; ++jsize) {
        FinSet J(jsize);
        for (const FinMap& e : all_epis(J, I)) {
          Predicate pulled = reindex(T, phi, e);
          for (const FinMap& f : all_maps(J, g.sigma)) {
            if (equiv(T, pulled, reindex(T, g.t, f))) {
              out.witnesses.push_back({isize, k, e, f});
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
      if (!found) {
        out.verdict = Verdict::Fails;
        out.counterwitness = "|I|=" + std::to_string(isize) + " phi=" + pred_str(phi);
        return out;
      }
    }
  }
  out.verdict = Verdict::HoldsWithinBounds;
  return out;
}

WeakToGenericTrace weak_to_generic(const TriposInstance& T, const GenericFamily& g,
                                   int max_index, int max_aux) {
  WeakToGenericTrace trace;

  // Precondition: the instance behaves as a prestack on sampled epis.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const FinMap& e : all_epis(FinSet(a), FinSet(b))) {
        PrestackResult pr = prestack_check(T, e);
        if (!pr.holds) {
          trace.verdict = Verdict::Fails;
          trace.detail = "precondition: prestack fails on sampled epi: " + pr.counterwitness;
          return trace;
        }
      }

  WeakGenericResult weak = is_weakly_generic(T, g, max_index, max_aux);
  if (weak.verdict != Verdict::HoldsWithinBounds) {
    trace.verdict = Verdict::Fails;
    trace.detail = "precondition: input not weakly generic: " + weak.counterwitness;
    return trace;
  }

  // E = {(u, U) in Sigma x P(Sigma) | u in U}, with its two projections.
  const FinSet& sigma = g.sigma;
  MembershipRel mem = powerset_membership(sigma);
  const FinSet& power = mem.power;
  std::vector<int> to_u, to_cap;
  std::map<int, int> pair_to_e;
  for (int pair = 0; pair < mem.pairs.ambient.size; ++pair) {
    if (!mem.pairs.contains(pair)) continue;
    pair_to_e[pair] = static_cast<int>(to_u.size());
    auto [u, cap] = pair_decode(pair, power.size);
    to_u.push_back(u);
    to_cap.push_back(cap);
  }
  trace.e_obj = FinSet(static_cast<int>(to_u.size()));
  trace.proj_sigma = FinMap(trace.e_obj, sigma, to_u);
  trace.proj_power = FinMap(trace.e_obj, power, to_cap);
  trace.result =
      GenericFamily{power, exists_along(T, trace.proj_power, reindex(T, g.t, trace.proj_sigma))};

  // Audit genericity of the result against every capped predicate, along the
  // proof's diagram.
  bool all_ok = true;
  for (const WeakGenericWitness& w : weak.witnesses) {
    GenericityAudit audit;
    audit.index_size = w.index_size;
    audit.phi_rank = w.phi_rank;
    audit.epi = w.epi;
    audit.to_sigma = w.to_sigma;
    FinSet I(w.index_size);
    Predicate phi = fiber_element(T, I, w.phi_rank);

    // g(i) = { f(j) | e(j) = i }, as a subset code of Sigma.
    std::vector<int> gtab(static_cast<size_t>(I.size), 0);
    for (int j = 0; j < w.epi.dom.size; ++j)
      gtab[static_cast<size_t>(w.epi(j))] |= 1 << w.to_sigma(j);
    audit.classifier = FinMap(I, power, gtab);

    // R = {(u, U, i) | u in U = g(i)}, with its projections and h.
    std::vector<int> r1tab, r2tab;
    std::map<long long, int> triple_to_r;
    for (int u = 0; u < sigma.size; ++u)
      for (int cap = 0; cap < power.size; ++cap) {
        if (!subset_code_contains(cap, u)) continue;
        for (int i = 0; i < I.size; ++i) {
          if (gtab[static_cast<size_t>(i)] != cap) continue;
          long long code = (static_cast<long long>(u) * power.size + cap) * I.size + i;
          triple_to_r[code] = static_cast<int>(r1tab.size());
          r1tab.push_back(pair_to_e.at(pair_encode(u, cap, power.size)));
          r2tab.push_back(i);
        }
      }
    audit.r_obj = FinSet(static_cast<int>(r1tab.size()));
    audit.r1 = FinMap(audit.r_obj, trace.e_obj, r1tab);
    audit.r2 = FinMap(audit.r_obj, I, r2tab);

    std::vector<int> htab(static_cast<size_t>(w.epi.dom.size));
    for (int j = 0; j < w.epi.dom.size; ++j) {
      int i = w.epi(j);
      long long code =
          (static_cast<long long>(w.to_sigma(j)) * power.size + gtab[static_cast<size_t>(i)]) *
              I.size +
          i;
      htab[static_cast<size_t>(j)] = triple_to_r.at(code);
    }
    audit.h = FinMap(w.epi.dom, audit.r_obj, htab);
    audit.h_onto = epi_mono(audit.h).is_epi;

    // The square (R; r1, r2) over the cospan q, g must be a pullback.
    Expected<bool> pb = validate_pullback_square(
        CospanSquare{trace.proj_power, audit.classifier, audit.r1, audit.r2});
    audit.matches = pb.ok() && equiv(T, reindex(T, trace.result.t, audit.classifier), phi);
    if (!audit.matches || !audit.h_onto) {
      all_ok = false;
      if (trace.detail.empty())
        trace.detail = "AUDIT FAILURE (would falsify the weak-to-generic lemma) at |I|=" +
                       std::to_string(w.index_size) + " phi rank " + std::to_string(w.phi_rank) +
                       (pb.ok() ? "" : ": " + pb.error());
    }
    trace.audits.push_back(std::move(audit));
  }
  trace.verdict = all_ok ? Verdict::HoldsWithinBounds : Verdict::Fails;
  return trace;
}

// ---------------------------------------------------------------------------
// Comprehension axiom.
// ---------------------------------------------------------------------------

ComprehensionWitness comprehension_witness(const TriposInstance& T, const FinSet& I) {
  if (T.is_implicative()) {
    // P(I) indexes the fiber A^I; epsilon is evaluation.
    long long fsize = fiber_size(T, I);
    FinSet power_index(static_cast<int>(fsize));
    FinSet amb = product_object(I, power_index);
    std::vector<int> eps(static_cast<size_t>(amb.size));
    int a_size = T.algebra->structure.size();
    for (int p = 0; p < power_index.size; ++p) {
      std::vector<int> tab = decode_tuple(p, I.size, a_size);
      for (int i = 0; i < I.size; ++i)
        eps[static_cast<size_t>(pair_encode(i, p, power_index.size))] =
            tab[static_cast<size_t>(i)];
    }
    return {I, power_index, Predicate{amb, std::move(eps)}};
  }
  // Power flavor: P(I) is the powerset of F(I); epsilon cuts F(I x P(I))
  // to the tuples whose P(I)-coordinates agree on a subset containing the
  // F(I)-tuple of first coordinates (the image of the membership relation
  // under the diagonal presentation of P(F(I)) as a subquotient).
  int n = T.power_exponent;
  FinSet fi = f_object(T, I);
  long long psize = checked_pow(2, fi.size, T.caps.max_fiber, "comprehension_witness");
  FinSet power_index(static_cast<int>(psize));
  FinSet amb = product_object(I, power_index);
  FinSet carrier = power_object(amb, n, T.caps.max_carrier);
  std::vector<bool> mask(static_cast<size_t>(carrier.size), false);
  for (int w = 0; w < carrier.size; ++w) {
    std::vector<int> coords = decode_tuple(w, n, amb.size);
    long long cap = -1;
    bool same = true;
    std::vector<int> ituple(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      auto [i, p] = pair_decode(coords[static_cast<size_t>(k)], power_index.size);
      ituple[static_cast<size_t>(k)] = i;
      if (cap == -1)
        cap = p;
      else if (cap != p)
        same = false;
    }
    if (!same) continue;
    long long member = encode_tuple(ituple, I.size);
    if (cap >= 0 && subset_code_contains(cap, static_cast<int>(member)))
      mask[static_cast<size_t>(w)] = true;
  }
  return {I, power_index, Predicate{amb, Subobject(carrier, std::move(mask))}};
}

namespace {

FormulaPtr comprehension_formula(const Predicate& rho, const FinSet& I, const FinSet& J,
                                 const ComprehensionWitness& W) {
  FormulaPtr body = f_iff(f_atom(rho, {I, J}, {"i", "j"}),
                          f_atom(W.epsilon, {I, W.power_index}, {"i", "p"}));
  return f_forall("j", J, f_exists("p", W.power_index, f_forall("i", I, body)));
}

}  // namespace

ComprehensionResult check_comprehension(const TriposInstance& T, const FinSet& I,
                                        const FinSet& J) {
  ComprehensionResult out{comprehension_witness(T, I), Verdict::HoldsWithinBounds, 0, ""};
  FinSet prod = product_object(I, J);
  long long total = fiber_size(T, prod);
  for (long long k = 0; k < total; ++k) {
    Predicate rho = fiber_element(T, prod, k);
    ++out.rho_checked;
    if (!formula_holds(T, comprehension_formula(rho, I, J, out.witness))) {
      out.verdict = Verdict::Fails;
      out.counterwitness = "rho rank " + std::to_string(k) + " = " + pred_str(rho);
      return out;
    }
  }
  return out;
}

std::optional<FinMap> check_skolem(const TriposInstance& T, const Predicate& rho, const FinSet& I,
                                   const FinSet& J, const ComprehensionWitness& W) {
  if (!(rho.index == product_object(I, J)))
    throw std::invalid_argument("check_skolem: rho must live over I x J");
  for (const FinMap& r : all_maps(J, W.power_index)) {
    // chi(i, j) := eps(i, r(j)), pulled back along id x r.
    Predicate chi = reindex(T, W.epsilon, product_map(identity_map(I), r));
    FormulaPtr body =
        f_iff(f_atom(rho, {I, J}, {"i", "j"}), f_atom(chi, {I, J}, {"i", "j"}));
    if (formula_holds(T, f_forall("j", J, f_forall("i", I, body)))) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regularity, composition, assemblies, morphisms.
// ---------------------------------------------------------------------------

RegularityResult check_regular(const TriposInstance& T, int max_map_size,
                               long long prestack_fiber_cap) {
  RegularityResult out;
  if (T.is_power()) {
    for (int a = 0; a <= max_map_size; ++a)
      for (int b = 0; b <= max_map_size; ++b)
        for (const FinMap& u : all_maps(FinSet(a), FinSet(b))) {
          ++out.maps_checked;
          if (epi_mono(u).is_epi && !epi_mono(f_map(T, u)).is_epi) {
            out.epi_preservation = false;
            out.detail = "F does not preserve the epi " + std::to_string(a) + "->" +
                         std::to_string(b);
          }
        }
  } else {
    // Over Set every epi splits and any functor preserves split epis, so
    // epi preservation is vacuous for the implicative constant-objects
    // functor; the prestack side below is still computed independently.
    out.detail = "epi preservation vacuous for this flavor";
  }

  for (int a = 0; a <= max_map_size; ++a)
    for (int b = 0; b <= max_map_size; ++b) {
      bool fits = true;
      try {
        fits = fiber_size(T, FinSet(b)) <= prestack_fiber_cap;
      } catch (const CapExceeded&) {
        fits = false;
      }
      if (!fits) continue;
      for (const FinMap& e : all_epis(FinSet(a), FinSet(b))) {
        ++out.epis_checked;
        PrestackResult pr = prestack_check(T, e);
        bool preserved = T.is_power() ? epi_mono(f_map(T, e)).is_epi : true;
        if (!pr.holds) {
          out.prestack = false;
          if (out.detail.empty()) out.detail = "prestack fails: " + pr.counterwitness;
        }
        if (pr.holds != preserved) {
          out.verdicts_agree = false;
          out.detail = "epi-preservation and prestack verdicts disagree on epi " +
                       std::to_string(a) + "->>" + std::to_string(b);
        }
      }
    }

  out.verdict = (out.epi_preservation && out.prestack && out.verdicts_agree)
                    ? Verdict::HoldsWithinBounds
                    : Verdict::Fails;
  return out;
}

CompositionResult check_tripos_composition(int f1_exponent, int h_exponent, int max_obj,
                                           int max_index) {
  if (f1_exponent < 1 || h_exponent < 1)
    throw std::invalid_argument("check_tripos_composition: exponents must be >= 1");
  CompositionResult out;
  int exp = f1_exponent * h_exponent;
  for (int a = 0; a <= max_obj; ++a) {
    SubquotientRecord rec;
    rec.object_size = a;
    for (int isize = 0; isize <= max_index; ++isize) {
      long long fsize = checked_pow(isize, exp, 1 << 22, "check_tripos_composition");
      if (fsize < a) continue;
      // Witness per the iteration-theorem proof: the subobject C of
      // F2(I) = H(F1(I)) given by the first |A| tuples, with the identity
      // epi onto A. Both legs are validated.
      FinSet A(a);
      FinSet C(a);
      FinSet f2i(static_cast<int>(fsize));
      std::vector<int> inc(static_cast<size_t>(a));
      for (int x = 0; x < a; ++x) inc[static_cast<size_t>(x)] = x;
      rec.mono = FinMap(C, f2i, inc);
      rec.epi = FinMap(C, A, inc);
      if (!epi_mono(rec.mono).is_mono || !epi_mono(rec.epi).is_epi) continue;
      rec.found = true;
      rec.index_size = isize;
      break;
    }
    if (!rec.found) out.verdict = Verdict::Fails;
    out.records.push_back(std::move(rec));
  }
  return out;
}

AssemblyResult assembly_check(const TriposInstance& T, const FinSet& A, int max_index) {
  AssemblyResult out;
  for (int isize = 0; isize <= max_index; ++isize) {
    FinSet fi = f_object(T, FinSet(isize));
    if (fi.size < A.size) continue;
    std::vector<int> inc(static_cast<size_t>(A.size));
    for (int x = 0; x < A.size; ++x) inc[static_cast<size_t>(x)] = x;
    out.found = true;
    out.index_size = isize;
    out.embedding = FinMap(A, fi, std::move(inc));
    return out;
  }
  return out;
}

bool assembly_verify(const TriposInstance& T, const FinSet& A, const FinMap& candidate) {
  if (!(candidate.dom == A)) return false;
  if (!epi_mono(candidate).is_mono) return false;
  // The codomain must be F(I) for some I.
  for (int isize = 0; isize <= candidate.cod.size; ++isize) {
    long long fsize = checked_pow(isize, T.power_exponent, 1 << 22, "assembly_verify");
    if (fsize == candidate.cod.size) return true;
    if (fsize > candidate.cod.size) break;
  }
  return false;
}

MorphismCheckResult implicative_morphism_check(const std::vector<int>& h,
                                               const TriposInstance& T1,
                                               const TriposInstance& T2, int max_index) {
  if (!T1.is_implicative() || !T2.is_implicative())
    throw std::invalid_argument("implicative_morphism_check: both instances must be implicative");
  int n1 = T1.algebra->structure.size();
  int n2 = T2.algebra->structure.size();
  if (static_cast<int>(h.size()) != n1)
    throw std::invalid_argument("implicative_morphism_check: table length mismatch");
  for (int v : h)
    if (v < 0 || v >= n2)
      throw std::invalid_argument("implicative_morphism_check: table entry out of range");

  MorphismCheckResult out;
  auto apply = [&](const Predicate& p) {
    std::vector<int> tab(p.table().size());
    for (size_t i = 0; i < tab.size(); ++i) tab[i] = h[static_cast<size_t>(p.table()[i])];
    return Predicate{p.index, std::move(tab)};
  };
  auto violate = [&](const std::string& law, const std::string& witness) {
    out.verdict = Verdict::Fails;
    out.violated_law = law + " at " + witness;
  };

  for (int isize = 0; isize <= max_index && out.verdict == Verdict::HoldsWithinBounds; ++isize) {
    FinSet I(isize);
    std::vector<Predicate> fib = fiber_enumerate(T1, I);
    Predicate top1 = top_pred(T1, I);
    ++out.cases;
    if (!equiv(T2, apply(top1), top_pred(T2, I))) {
      violate("top-preservation", "|I|=" + std::to_string(isize));
      break;
    }
    for (const Predicate& a : fib) {
      for (const Predicate& b : fib) {
        ++out.cases;
        if (entails(T1, a, b) && !entails(T2, apply(a), apply(b))) {
          violate("monotonicity", pred_str(a) + " |- " + pred_str(b));
          break;
        }
        if (!equiv(T2, apply(and_pred(T1, a, b)), and_pred(T2, apply(a), apply(b)))) {
          violate("meet-preservation", pred_str(a) + " /\\ " + pred_str(b));
          break;
        }
      }
      if (out.verdict != Verdict::HoldsWithinBounds) break;
    }
    if (out.verdict != Verdict::HoldsWithinBounds) break;
    for (int jsize = 0; jsize <= max_index; ++jsize) {
      FinSet J(jsize);
      for (const FinMap& u : all_maps(J, I))
        for (const Predicate& a : fib) {
          ++out.cases;
          if (!(apply(reindex(T1, a, u)) == reindex(T2, apply(a), u))) {
            violate("strict-reindexing", pred_str(a));
            break;
          }
        }
      for (const FinMap& u : all_maps(I, J))
        for (const Predicate& a : fib) {
          ++out.cases;
          if (!equiv(T2, apply(exists_along(T1, u, a)), exists_along(T2, u, apply(a)))) {
            violate("exists-preservation", pred_str(a) + " along |I|=" + std::to_string(isize) +
                                                "->|J|=" + std::to_string(jsize));
            break;
          }
        }
      if (out.verdict != Verdict::HoldsWithinBounds) break;
    }
  }
  return out;
}

}  // namespace tripos
