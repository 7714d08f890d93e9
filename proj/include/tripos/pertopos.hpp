#pragma once

#include <string>
#include <vector>

#include "tripos/core.hpp"
#include "tripos/formula.hpp"
#include "tripos/laws.hpp"
#include "tripos/verdict.hpp"

namespace tripos {

/// An object of S[P]: an index set with an internal partial equivalence
/// relation (symmetric, transitive, not necessarily reflexive).
struct PerObject {
  FinSet index;
  Predicate eq;  // over index x index
};

/// A morphism representative: a strict, relational, single-valued, total
/// internal relation between two PERs.
struct FunRel {
  PerObject src;
  PerObject tgt;
  Predicate rel;  // over src.index x tgt.index
};

struct InternalCheck {
  bool valid = true;
  std::vector<std::string> failures;  // names of the failing internal formulas
};

/// Symmetry and transitivity, evaluated in the internal logic.
InternalCheck validate_per(const TriposInstance& T, const PerObject& X);
/// Strictness, relationality, single-valuedness, totality.
InternalCheck validate_funrel(const TriposInstance& T, const FunRel& F);

/// Morphism equality in S[P]: mutual entailment of representatives over the
/// same boundaries.
bool funrel_equal(const TriposInstance& T, const FunRel& F, const FunRel& G);

FunRel identity_funrel(const PerObject& X);

/// Relational composition via the tripos exists; the output is validated
/// (a failure would contradict the law suite and throws).
FunRel compose_funrel(const TriposInstance& T, const FunRel& F, const FunRel& G);

/// The constant-objects functor: Delta(I) has trivial equality, Delta(u) the
/// graph of u.
PerObject delta_obj(const TriposInstance& T, const FinSet& I);
FunRel delta_map(const TriposInstance& T, const FinMap& u);

/// Product PER and the pairing of two morphisms into it.
PerObject per_product(const TriposInstance& T, const PerObject& X, const PerObject& Y);
FunRel pair_funrel(const TriposInstance& T, const FunRel& F, const FunRel& G);

/// Internal characterizations of epi and mono in S[P].
bool funrel_internal_epi(const TriposInstance& T, const FunRel& F);
bool funrel_internal_mono(const TriposInstance& T, const FunRel& F);

/// All valid PERs with index size 0..max_index, in enumeration order.
std::vector<PerObject> enumerate_pers(const TriposInstance& T, int max_index);
/// All valid FunRels between two PERs, in enumeration order of payloads.
std::vector<FunRel> enumerate_funrels(const TriposInstance& T, const PerObject& X,
                                      const PerObject& Y);

/// Category laws over the full enumerated morphism set: identities,
/// associativity, Delta functoriality, and agreement of the internal
/// epi/mono characterizations with cancellation.
LawSuiteResult run_per_category_suite(const TriposInstance& T, int max_index, int max_map_size);

struct DeltaLimitsResult {
  Verdict verdict = Verdict::HoldsWithinBounds;
  long long cones_checked = 0;
  std::string detail;
};

/// Delta(1) is terminal among capped PERs, and Delta(I x J) with the Delta
/// projections is a product of Delta(I) and Delta(J): every cone has exactly
/// one mediating morphism up to mutual entailment, searched over the
/// enumerated hom set.
DeltaLimitsResult check_delta_limits(const TriposInstance& T, int max_index, const FinSet& I,
                                     const FinSet& J);

struct SubquotientWitness {
  FinSet index;   // the I with A a subquotient of Delta(I)
  PerObject c;    // domain of the span
  FunRel epi;     // C ->> A
  FunRel mono;    // C >-> Delta(I)
  bool epi_internal = false;
  bool mono_internal = false;
  Verdict verdict = Verdict::Fails;
};

/// The direct subquotient construction: C is A's underlying set with
/// equality cut to the diagonal of A's domain, the epi is A.eq itself and
/// the mono is C's diagonal inclusion into Delta(A.index).
SubquotientWitness subquotient_witness(const TriposInstance& T, const PerObject& A);

}  // namespace tripos
