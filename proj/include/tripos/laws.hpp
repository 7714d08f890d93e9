#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripos/core.hpp"
#include "tripos/formula.hpp"
#include "tripos/verdict.hpp"

namespace tripos {

// ---------------------------------------------------------------------------
// Fibered-preorder law suite: preorder, reindexing functoriality, Heyting
// laws, quantifier adjointness, Frobenius, Beck-Chevalley.
// ---------------------------------------------------------------------------

struct LawCaps {
  int max_obj = 3;  // sizes of index objects swept (0..max_obj)
};

struct LawSweep {
  std::string law;
  long long cases = 0;
  std::optional<std::string> failure;
};

struct LawSuiteResult {
  std::vector<LawSweep> sweeps;
  bool all_hold() const;
  long long total_cases() const;
  std::string first_failure() const;
};

LawSuiteResult run_law_suite(const TriposInstance& T, const LawCaps& caps);

// ---------------------------------------------------------------------------
// Generic families (traditional triposes) and the weakly-generic upgrade.
// ---------------------------------------------------------------------------

struct GenericFamily {
  FinSet sigma;
  Predicate t;
};

struct GenericSearchResult {
  std::optional<GenericFamily> found;
  long long candidates_tried = 0;
  std::string bounds;
};

/// Searches sigma sizes ascending and candidate predicates in lexicographic
/// order for a t from which every predicate over every I <= max_index arises
/// by reindexing, up to mutual entailment. A miss is bounded evidence only.
GenericSearchResult find_generic_family(const TriposInstance& T, int sigma_min, int sigma_max,
                                        int max_index);

struct WeakGenericWitness {
  int index_size = 0;
  long long phi_rank = 0;
  FinMap epi;        // e : J ->> I
  FinMap to_sigma;   // f : J -> Sigma
};

struct WeakGenericResult {
  Verdict verdict = Verdict::Fails;
  std::vector<WeakGenericWitness> witnesses;  // one per (I, phi) on success
  std::string counterwitness;                 // first (I, phi) with no (e, f)
  std::string bounds;
};

/// Weak genericity: every phi matches reindex(t, f) after passing along an
/// epi e; epi domains J range up to max_aux.
WeakGenericResult is_weakly_generic(const TriposInstance& T, const GenericFamily& g,
                                    int max_index, int max_aux);

struct GenericityAudit {
  int index_size = 0;
  long long phi_rank = 0;
  FinMap epi;            // e : J ->> I
  FinMap to_sigma;       // f : J -> Sigma
  FinMap classifier;     // g : I -> P(Sigma)
  FinSet r_obj;          // R = {(u,U,i) | u in U = g(i)}
  FinMap r1;             // R -> E
  FinMap r2;             // R -> I
  FinMap h;              // J -> R
  bool h_onto = false;
  bool matches = false;  // reindex(result.t, g) -||- phi
};

struct WeakToGenericTrace {
  FinSet e_obj;          // E = {(u,U) | u in U} inside Sigma x P(Sigma)
  FinMap proj_sigma;     // p : E -> Sigma
  FinMap proj_power;     // q : E -> P(Sigma)
  GenericFamily result;  // (P(Sigma), exists_q reindex(t, p))
  std::vector<GenericityAudit> audits;
  Verdict verdict = Verdict::Fails;
  std::string detail;
};

/// Runs the weakly-generic-to-generic construction and audits genericity of
/// the result against every predicate over every I <= max_index. An audit
/// failure is reported loudly: it would contradict the underlying lemma.
WeakToGenericTrace weak_to_generic(const TriposInstance& T, const GenericFamily& g,
                                   int max_index, int max_aux);

// ---------------------------------------------------------------------------
// Comprehension axiom (CA) and its Skolemized strengthening.
// ---------------------------------------------------------------------------

struct ComprehensionWitness {
  FinSet base;         // I
  FinSet power_index;  // P(I)
  Predicate epsilon;   // over I x P(I)
};

/// The canonical witness: P(I) indexes the fiber over I and epsilon is the
/// evaluation / membership predicate.
ComprehensionWitness comprehension_witness(const TriposInstance& T, const FinSet& I);

struct ComprehensionResult {
  ComprehensionWitness witness;
  Verdict verdict = Verdict::Fails;
  long long rho_checked = 0;
  std::string counterwitness;  // first failing rho
};

/// Evaluates  forall j. exists p. forall i. rho(i,j) <-> eps(i,p)  for every
/// rho over I x J.
ComprehensionResult check_comprehension(const TriposInstance& T, const FinSet& I, const FinSet& J);

/// Searches for a base-level Skolem function r : J -> P(I) making
/// forall j. forall i. rho(i,j) <-> eps(i, r(j)) hold. First witness wins.
std::optional<FinMap> check_skolem(const TriposInstance& T, const Predicate& rho, const FinSet& I,
                                   const FinSet& J, const ComprehensionWitness& W);

// ---------------------------------------------------------------------------
// Regularity, composition, assemblies, implicative morphisms.
// ---------------------------------------------------------------------------

struct RegularityResult {
  Verdict verdict = Verdict::HoldsWithinBounds;
  bool epi_preservation = true;     // power flavor: u epi => F(u) epi
  bool prestack = true;             // reindexing along epis reflects order
  bool verdicts_agree = true;       // the two sides, computed independently
  long long maps_checked = 0;
  long long epis_checked = 0;
  std::string detail;
};

/// max_map_size bounds the epi-preservation sweep. The prestack sweep scans
/// all predicate pairs over each epi's codomain, so it is bounded separately:
/// epis whose codomain fiber exceeds prestack_fiber_cap are skipped.
RegularityResult check_regular(const TriposInstance& T, int max_map_size,
                               long long prestack_fiber_cap = 512);

struct SubquotientRecord {
  int object_size = 0;
  bool found = false;
  int index_size = -1;    // I with a witness, when found
  FinMap mono;            // C >-> F(I)
  FinMap epi;             // C ->> A
};

struct CompositionResult {
  Verdict verdict = Verdict::HoldsWithinBounds;
  std::vector<SubquotientRecord> records;  // one per object size 0..max_obj
};

/// Instance-level Iteration-Theorem check for power flavors: the composite
/// of exponents (n1 then n2) satisfies the subquotient condition on capped
/// objects, witnesses composed through the middle topos.
CompositionResult check_tripos_composition(int f1_exponent, int h_exponent, int max_obj,
                                           int max_index);

struct AssemblyResult {
  bool found = false;
  int index_size = -1;
  FinMap embedding;  // A >-> F(I) when found
};

/// Decides whether A embeds into F(I) for some |I| <= max_index (power
/// flavor); optionally verifies a caller-supplied candidate mono instead.
AssemblyResult assembly_check(const TriposInstance& T, const FinSet& A, int max_index);
bool assembly_verify(const TriposInstance& T, const FinSet& A, const FinMap& candidate);

struct MorphismCheckResult {
  Verdict verdict = Verdict::HoldsWithinBounds;
  std::string violated_law;  // first violated law with fiber witness
  long long cases = 0;
};

/// h : A1 -> A2 induces g_I(phi) = h . phi; checks monotonicity, preservation
/// of top and binary meet up to -||-, strict commutation with reindexing and
/// commutation with exists_u up to -||-, on all fibers with |I| <= max_index.
MorphismCheckResult implicative_morphism_check(const std::vector<int>& h,
                                               const TriposInstance& T1,
                                               const TriposInstance& T2, int max_index);

}  // namespace tripos
