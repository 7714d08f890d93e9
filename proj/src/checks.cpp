#include "tripos/checks.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tripos/gallery.hpp"
#include "tripos/laws.hpp"
#include "tripos/pertopos.hpp"
#include "tripos/textio.hpp"

namespace tripos {

long long CheckSpec::param(const std::string& key, long long fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string CheckSpec::str(const std::string& key, const std::string& fallback) const {
  auto it = strings.find(key);
  return it == strings.end() ? fallback : it->second;
}

TriposInstance instance_from_spec(const CheckSpec& spec) {
  if (!spec.algebra_text.empty()) {
    Expected<ImplicativeAlgebra> alg = parse_algebra(spec.algebra_text);
    if (!alg) throw std::invalid_argument("algebra: " + alg.error());
    return make_implicative_tripos(*alg);
  }
  const std::string& f = spec.flavor;
  if (f == "identity") return make_identity_tripos();
  if (f.rfind("power:", 0) == 0) {
    int n = std::stoi(f.substr(6));
    return make_power_tripos(n);
  }
  Expected<ImplicativeAlgebra> alg = builtin_algebra(f);
  if (!alg) throw std::invalid_argument("unknown flavor '" + f + "': " + alg.error());
  return make_implicative_tripos(*alg);
}

namespace {

using Json = nlohmann::ordered_json;
using Runner = std::function<void(const CheckSpec&, Report&)>;

struct CheckEntry {
  CheckInfo info;
  Runner run;
};

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

Json sweeps_json(const LawSuiteResult& r) {
  Json j = Json::array();
  for (const LawSweep& s : r.sweeps) {
    Json e;
    e["law"] = s.law;
    e["cases"] = s.cases;
    if (s.failure) e["failure"] = *s.failure;
    j.push_back(e);
  }
  return j;
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = [] {
    std::vector<CheckEntry> r;

    r.push_back({{"laws", "fibration of Heyting algebras with internal sums and products",
                  "preorder, reindexing, Heyting, adjointness, Frobenius, Beck-Chevalley"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int max_obj = static_cast<int>(
                       spec.param("max-obj", T.is_implicative() ? 2 : 3));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-obj"] = max_obj;
                   rep.bounds = "index sizes 0.." + std::to_string(max_obj);
                   LawSuiteResult res = run_law_suite(T, LawCaps{max_obj});
                   rep.verdict = res.all_hold() ? Verdict::HoldsWithinBounds : Verdict::Fails;
                   rep.witness["cases"] = res.total_cases();
                   rep.witness["sweeps"] = sweeps_json(res);
                   if (!res.all_hold()) rep.witness["failure"] = res.first_failure();
                 }});

    r.push_back({{"prestack", "reindexing along epis reflects the order",
                  "prestack condition on every epi within caps"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int max_map = static_cast<int>(spec.param("max-map", 3));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-map"] = max_map;
                   rep.bounds = "epis between sizes 0.." + std::to_string(max_map);
                   long long checked = 0;
                   rep.verdict = Verdict::HoldsWithinBounds;
                   for (int a = 0; a <= max_map && rep.verdict == Verdict::HoldsWithinBounds; ++a)
                     for (int b = 0; b <= max_map; ++b) {
                       for (const FinMap& e : all_epis(FinSet(a), FinSet(b))) {
                         ++checked;
                         PrestackResult pr = prestack_check(T, e);
                         if (!pr.holds) {
                           rep.verdict = Verdict::Fails;
                           rep.witness["counterwitness"] = pr.counterwitness;
                           break;
                         }
                       }
                       if (rep.verdict != Verdict::HoldsWithinBounds) break;
                     }
                   rep.witness["epis-checked"] = checked;
                 }});

    r.push_back({{"ca", "comprehension axiom: forall j. exists p. forall i. rho(i,j) <-> i eps p",
                  "comprehension axiom for every rho over I x J"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   FinSet I(static_cast<int>(spec.param("i", 2)));
                   FinSet J(static_cast<int>(spec.param("j", 2)));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["i"] = I.size;
                   rep.params["j"] = J.size;
                   rep.bounds = "all rho over I x J";
                   ComprehensionResult res = check_comprehension(T, I, J);
                   rep.verdict = res.verdict;
                   rep.witness["rho-checked"] = res.rho_checked;
                   rep.witness["power-index-size"] = res.witness.power_index.size;
                   if (!res.counterwitness.empty()) rep.witness["counterwitness"] = res.counterwitness;
                 }});

    r.push_back({{"skolem", "witnessed by Skolem functions in the base",
                  "base-level Skolem witness search for every rho over I x J"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   FinSet I(static_cast<int>(spec.param("i", 2)));
                   FinSet J(static_cast<int>(spec.param("j", 2)));
                   long long single = spec.param("rho", -1);
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["i"] = I.size;
                   rep.params["j"] = J.size;
                   ComprehensionWitness W = comprehension_witness(T, I);
                   FinSet prod = product_object(I, J);
                   long long total = fiber_size(T, prod);
                   long long found = 0, misses = 0, first_miss = -1;
                   long long from = single >= 0 ? single : 0;
                   long long to = single >= 0 ? single + 1 : total;
                   rep.bounds = single >= 0 ? "single rho" : "all rho over I x J";
                   for (long long k = from; k < to; ++k) {
                     Predicate rho = fiber_element(T, prod, k);
                     if (check_skolem(T, rho, I, J, W))
                       ++found;
                     else {
                       ++misses;
                       if (first_miss < 0) first_miss = k;
                     }
                   }
                   rep.verdict = misses == 0 ? Verdict::HoldsWithinBounds : Verdict::Fails;
                   rep.witness["found"] = found;
                   rep.witness["missing"] = misses;
                   if (first_miss >= 0) rep.witness["first-missing-rho"] = first_miss;
                 }});

    r.push_back({{"generic", "a mono t : T >-> F Sigma such that every mono fits into a pullback",
                  "bounded search for a generic family"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int smin = static_cast<int>(spec.param("sigma-min", 1));
                   int smax = static_cast<int>(spec.param("sigma-max", 4));
                   int imax = static_cast<int>(spec.param("max-index", 3));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["sigma-min"] = smin;
                   rep.params["sigma-max"] = smax;
                   rep.params["max-index"] = imax;
                   GenericSearchResult res = find_generic_family(T, smin, smax, imax);
                   rep.bounds = res.bounds;
                   rep.witness["candidates-tried"] = res.candidates_tried;
                   if (res.found) {
                     rep.verdict = Verdict::HoldsWithinBounds;
                     rep.witness["sigma"] = res.found->sigma.size;
                     rep.witness["t"] = pred_str(res.found->t);
                   } else {
                     rep.verdict = Verdict::Fails;
                     rep.witness["note"] =
                         "none found within bounds: bounded evidence, not a proof of "
                         "non-traditionality";
                   }
                 }});

    r.push_back({{"weakly-generic", "every mono fits after an epi e : J ->> I",
                  "weak genericity of a given family"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   FinSet sigma(static_cast<int>(spec.param("sigma", 2)));
                   GenericFamily g{sigma, fiber_element(T, sigma, spec.param("t", 1))};
                   int imax = static_cast<int>(spec.param("max-index", 3));
                   int jmax = static_cast<int>(spec.param("max-aux", 3));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["sigma"] = sigma.size;
                   rep.params["t"] = pred_str(g.t);
                   rep.params["max-index"] = imax;
                   rep.params["max-aux"] = jmax;
                   WeakGenericResult res = is_weakly_generic(T, g, imax, jmax);
                   rep.bounds = res.bounds;
                   rep.verdict = res.verdict;
                   rep.witness["witnesses"] = static_cast<long long>(res.witnesses.size());
                   if (!res.counterwitness.empty()) rep.witness["counterwitness"] = res.counterwitness;
                 }});

    r.push_back({{"weak-to-generic", "exists_q p^* t is a generic family",
                  "weakly generic to generic construction with full audit"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   FinSet sigma(static_cast<int>(spec.param("sigma", 2)));
                   GenericFamily g{sigma, fiber_element(T, sigma, spec.param("t", 1))};
                   int imax = static_cast<int>(spec.param("max-index", 4));
                   int jmax = static_cast<int>(spec.param("max-aux", 4));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["sigma"] = sigma.size;
                   rep.params["t"] = pred_str(g.t);
                   rep.params["max-index"] = imax;
                   rep.params["max-aux"] = jmax;
                   rep.bounds = "|I| <= " + std::to_string(imax) + ", |J| <= " + std::to_string(jmax);
                   WeakToGenericTrace res = weak_to_generic(T, g, imax, jmax);
                   rep.verdict = res.verdict;
                   rep.witness["audits"] = static_cast<long long>(res.audits.size());
                   bool all_onto = true;
                   for (const GenericityAudit& a : res.audits) all_onto = all_onto && a.h_onto;
                   rep.witness["h-onto-in-every-trace"] = all_onto;
                   if (res.verdict == Verdict::HoldsWithinBounds) {
                     rep.witness["result-sigma"] = res.result.sigma.size;
                     rep.witness["result-t"] = pred_str(res.result.t);
                   }
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"regular", "regular iff F preserves epis",
                  "epi preservation against the prestack criterion"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int max_map = static_cast<int>(spec.param("max-map", 4));
                   long long pcap = spec.param("prestack-fiber-cap", 512);
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-map"] = max_map;
                   rep.params["prestack-fiber-cap"] = pcap;
                   rep.bounds = "maps between sizes 0.." + std::to_string(max_map) +
                                "; prestack on codomain fibers <= " + std::to_string(pcap);
                   RegularityResult res = check_regular(T, max_map, pcap);
                   rep.verdict = res.verdict;
                   rep.witness["epi-preservation"] = res.epi_preservation;
                   rep.witness["prestack"] = res.prestack;
                   rep.witness["verdicts-agree"] = res.verdicts_agree;
                   rep.witness["maps-checked"] = res.maps_checked;
                   rep.witness["epis-checked"] = res.epis_checked;
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"composition", "H is a tripos iff H preserves finite limits",
                  "subquotient witnesses for a composite of power triposes"},
                 [](const CheckSpec& spec, Report& rep) {
                   int n1 = static_cast<int>(spec.param("n1", 2));
                   int n2 = static_cast<int>(spec.param("n2", 3));
                   int max_obj = static_cast<int>(spec.param("max-obj", 4));
                   int max_index = static_cast<int>(spec.param("max-index", 4));
                   rep.params["n1"] = n1;
                   rep.params["n2"] = n2;
                   rep.params["max-obj"] = max_obj;
                   rep.params["max-index"] = max_index;
                   rep.bounds = "objects 0.." + std::to_string(max_obj) + ", |I| <= " +
                                std::to_string(max_index);
                   CompositionResult res = check_tripos_composition(n1, n2, max_obj, max_index);
                   CompositionResult direct = check_tripos_composition(n1 * n2, 1, max_obj, max_index);
                   bool agree = res.records.size() == direct.records.size();
                   for (size_t k = 0; agree && k < res.records.size(); ++k)
                     agree = res.records[k].found == direct.records[k].found &&
                             res.records[k].index_size == direct.records[k].index_size;
                   rep.verdict = (res.verdict == Verdict::HoldsWithinBounds && agree)
                                     ? Verdict::HoldsWithinBounds
                                     : Verdict::Fails;
                   rep.witness["objects"] = static_cast<long long>(res.records.size());
                   rep.witness["agrees-with-direct-exponent"] = agree;
                 }});

    r.push_back({{"assembly", "assemblies: subobjects of some FI",
                  "embedding of an object into F(I) within caps"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   if (!T.is_power())
                     throw std::invalid_argument("assembly: power flavor only");
                   FinSet A(static_cast<int>(spec.param("size", 3)));
                   int imax = static_cast<int>(spec.param("max-index", 2));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["size"] = A.size;
                   rep.params["max-index"] = imax;
                   rep.bounds = "|I| <= " + std::to_string(imax);
                   AssemblyResult res = assembly_check(T, A, imax);
                   rep.verdict = res.found ? Verdict::HoldsWithinBounds : Verdict::Fails;
                   if (res.found) {
                     rep.witness["index"] = res.index_size;
                     if (!assembly_verify(T, A, res.embedding))
                       throw std::logic_error("assembly: constructed embedding failed verification");
                   } else {
                     rep.witness["note"] = "no embedding within bounds";
                   }
                 }});

    r.push_back({{"imp-morphism", "g_I(phi) = h . phi preserves regular logic",
                  "implicative algebra morphism law sweep"},
                 [](const CheckSpec& spec, Report& rep) {
                   Expected<ImplicativeAlgebra> a1 = builtin_algebra(spec.str("from", "chain3"));
                   Expected<ImplicativeAlgebra> a2 = builtin_algebra(spec.str("to", "bool2"));
                   if (!a1) throw std::invalid_argument(a1.error());
                   if (!a2) throw std::invalid_argument(a2.error());
                   std::vector<int> h = parse_int_list(spec.str("map", "0,1,1"));
                   int imax = static_cast<int>(spec.param("max-index", 2));
                   rep.params["from"] = spec.str("from", "chain3");
                   rep.params["to"] = spec.str("to", "bool2");
                   rep.params["map"] = spec.str("map", "0,1,1");
                   rep.params["max-index"] = imax;
                   rep.bounds = "fibers |I| <= " + std::to_string(imax);
                   TriposInstance T1 = make_implicative_tripos(*a1);
                   TriposInstance T2 = make_implicative_tripos(*a2);
                   MorphismCheckResult res = implicative_morphism_check(h, T1, T2, imax);
                   rep.verdict = res.verdict;
                   rep.witness["cases"] = res.cases;
                   if (!res.violated_law.empty()) rep.witness["violated-law"] = res.violated_law;
                 }});

    r.push_back({{"separator-closure", "closed under modus ponens",
                  "least-separator fixpoint vs the intersection oracle"},
                 [](const CheckSpec& spec, Report& rep) {
                   int max_size = static_cast<int>(spec.param("max-size", 4));
                   int full_enum = static_cast<int>(spec.param("full-enum-max", 3));
                   rep.params["max-size"] = max_size;
                   rep.params["full-enum-max"] = full_enum;
                   rep.bounds = "all labeled lattices |A| <= " + std::to_string(max_size) +
                                "; all imp tables for |A| <= " + std::to_string(full_enum) +
                                ", Heyting and constant-top above";
                   ClosureSweepResult res = separator_closure_sweep(max_size, full_enum);
                   rep.verdict = res.holds ? Verdict::HoldsWithinBounds : Verdict::Fails;
                   rep.witness["structures"] = res.structures;
                   rep.witness["generator-sets"] = res.generator_sets;
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"counterexample", "equivalent if and only if n = m (via 2^n = 2^m)",
                  "fiber-over-2 cardinalities discriminate the F_n triposes"},
                 [](const CheckSpec& spec, Report& rep) {
                   int n = static_cast<int>(spec.param("n", 2));
                   int m = static_cast<int>(spec.param("m", 3));
                   rep.params["n"] = n;
                   rep.params["m"] = m;
                   rep.bounds = "exact computation";
                   CounterexampleReport res = counterexample_report(n, m);
                   rep.verdict = Verdict::HoldsWithinBounds;
                   rep.witness["fiber-n"] = res.fiber_n;
                   rep.witness["fiber-m"] = res.fiber_m;
                   rep.witness["equivalent"] = res.equivalent;
                   rep.witness["discriminator"] = res.anchor;
                 }});

    r.push_back({{"power-limits", "I -> I^n is a tripos",
                  "F_n preserves capped finite limits and splits the diagonal"},
                 [](const CheckSpec& spec, Report& rep) {
                   int n = static_cast<int>(spec.param("n", 2));
                   int max_obj = static_cast<int>(spec.param("max-obj", 3));
                   rep.params["n"] = n;
                   rep.params["max-obj"] = max_obj;
                   rep.bounds = "objects 0.." + std::to_string(max_obj);
                   PowerTriposReport res = power_tripos(n, max_obj);
                   rep.verdict = res.verdict;
                   rep.witness["limit-checks"] = res.limit_checks;
                   rep.witness["split-checks"] = res.split_checks;
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"nabla-adjunction", "Pi -| Delta -| Gamma -| nabla",
                  "hom-set bijection Hom(G, nabla I) = Hom(Gamma G, I)"},
                 [](const CheckSpec& spec, Report& rep) {
                   int nodes = static_cast<int>(spec.param("max-nodes", 2));
                   int extra = static_cast<int>(spec.param("max-extra", 2));
                   int imax = static_cast<int>(spec.param("max-i", 2));
                   rep.params["max-nodes"] = nodes;
                   rep.params["max-extra"] = extra;
                   rep.params["max-i"] = imax;
                   rep.bounds = "graphs <= " + std::to_string(nodes) + " nodes, <= " +
                                std::to_string(extra) + " extra edges; |I| <= " +
                                std::to_string(imax);
                   AdjunctionReport res = check_nabla_adjunction(nodes, extra, imax);
                   rep.verdict = res.verdict;
                   rep.witness["pairs-checked"] = res.pairs_checked;
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"nabla-cocontinuity", "not the inverse image part of a geometric morphism",
                  "nabla(1+1) vs nabla(1)+nabla(1): no isomorphism"},
                 [](const CheckSpec&, Report& rep) {
                   rep.bounds = "exhaustive morphism search";
                   CocontinuityReport res = nabla_not_cocontinuous();
                   rep.verdict = res.isomorphic ? Verdict::Fails : Verdict::HoldsWithinBounds;
                   rep.witness["nabla-of-sum-edges"] = res.nabla_of_sum_edges;
                   rep.witness["sum-of-nablas-edges"] = res.sum_of_nablas_edges;
                   rep.witness["morphisms-searched"] = res.isos_searched;
                   rep.witness["conclusion"] = res.conclusion;
                 }});

    r.push_back({{"nabla-cover", "every object appears as subquotient of some nabla(I)",
                  "direct cover of a reflexive graph through nabla of its edge set"},
                 [](const CheckSpec& spec, Report& rep) {
                   int nodes = static_cast<int>(spec.param("max-nodes", 2));
                   int extra = static_cast<int>(spec.param("max-extra", 2));
                   rep.params["max-nodes"] = nodes;
                   rep.params["max-extra"] = extra;
                   rep.bounds = "graphs <= " + std::to_string(nodes) + " nodes, <= " +
                                std::to_string(extra) + " extra edges";
                   long long checked = 0;
                   rep.verdict = Verdict::HoldsWithinBounds;
                   for (const ReflexiveGraph& g : enumerate_reflexive_graphs(nodes, extra)) {
                     ++checked;
                     CoverWitness w = cover_by_nabla(g);
                     if (w.verdict != Verdict::HoldsWithinBounds) {
                       rep.verdict = Verdict::Fails;
                       rep.witness["failing-graph-nodes"] = g.nodes.size;
                       rep.witness["failing-graph-edges"] = g.edges.size;
                       break;
                     }
                   }
                   rep.witness["graphs-checked"] = checked;
                 }});

    r.push_back({{"pertopos", "the category S[P] of partial equivalence relations",
                  "category laws over the full enumerated morphism set"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int imax = static_cast<int>(spec.param("max-index", 2));
                   int mmax = static_cast<int>(spec.param("max-map", 3));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-index"] = imax;
                   rep.params["max-map"] = mmax;
                   rep.bounds = "PER indices <= " + std::to_string(imax) + ", delta maps <= " +
                                std::to_string(mmax);
                   LawSuiteResult res = run_per_category_suite(T, imax, mmax);
                   rep.verdict = res.all_hold() ? Verdict::HoldsWithinBounds : Verdict::Fails;
                   rep.witness["cases"] = res.total_cases();
                   rep.witness["sweeps"] = sweeps_json(res);
                   if (!res.all_hold()) rep.witness["failure"] = res.first_failure();
                 }});

    r.push_back({{"delta-limits", "F preserves finite limits",
                  "Delta(1) terminal and Delta(I x J) a product of deltas"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int imax = static_cast<int>(spec.param("max-index", 2));
                   FinSet I(static_cast<int>(spec.param("i", 2)));
                   FinSet J(static_cast<int>(spec.param("j", 2)));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-index"] = imax;
                   rep.params["i"] = I.size;
                   rep.params["j"] = J.size;
                   rep.bounds = "PER indices <= " + std::to_string(imax);
                   DeltaLimitsResult res = check_delta_limits(T, imax, I, J);
                   rep.verdict = res.verdict;
                   rep.witness["cones-checked"] = res.cones_checked;
                   if (!res.detail.empty()) rep.witness["detail"] = res.detail;
                 }});

    r.push_back({{"subquotient", "every object appears as subquotient of some FI",
                  "direct subquotient witness over Delta for every capped PER"},
                 [](const CheckSpec& spec, Report& rep) {
                   TriposInstance T = instance_from_spec(spec);
                   int imax = static_cast<int>(spec.param("max-index", 2));
                   rep.params["flavor"] = T.flavor_name();
                   rep.params["max-index"] = imax;
                   rep.bounds = "PER indices <= " + std::to_string(imax);
                   long long checked = 0;
                   rep.verdict = Verdict::HoldsWithinBounds;
                   for (const PerObject& A : enumerate_pers(T, imax)) {
                     ++checked;
                     SubquotientWitness w = subquotient_witness(T, A);
                     if (w.verdict != Verdict::HoldsWithinBounds) {
                       rep.verdict = Verdict::Fails;
                       rep.witness["failing-per"] = pred_str(A.eq);
                       break;
                     }
                   }
                   rep.witness["pers-checked"] = checked;
                 }});

    return r;
  }();
  return entries;
}

}  // namespace

std::vector<CheckInfo> list_gallery() {
  std::vector<CheckInfo> out;
  for (const CheckEntry& e : registry()) out.push_back(e.info);
  return out;
}

Report run_check(const CheckSpec& spec) {
  for (const CheckEntry& e : registry()) {
    if (e.info.id != spec.check_id) continue;
    Report rep;
    rep.check_id = e.info.id;
    rep.anchor = e.info.anchor;
    auto start = std::chrono::steady_clock::now();
    try {
      e.run(spec, rep);
    } catch (const CapExceeded& ex) {
      rep.verdict = Verdict::CapExceeded;
      rep.witness["cap"] = ex.what();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
  }
  throw std::invalid_argument("unknown check id '" + spec.check_id + "'");
}

}  // namespace tripos
