#pragma once

#include <string>
#include <vector>

#include "tripos/common.hpp"
#include "tripos/lattice.hpp"

namespace tripos {

/// A complete lattice with an implication that turns meets in its second
/// argument into meets: x -> /\Y = /\ { x -> y : y in Y }. Contravariance in
/// the first argument is not assumed; only the meet axiom is checked.
struct ImplicativeStructure {
  FinLattice lattice;
  std::vector<std::vector<int>> imp;

  int arrow(int a, int b) const { return imp[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int size() const { return lattice.size(); }
};

/// An upward closed set of designated truth values containing the K and S
/// combinators and closed under modus ponens.
struct Separator {
  std::vector<bool> members;

  bool contains(int a) const { return members[static_cast<size_t>(a)]; }
  int count() const;
  friend bool operator==(const Separator& a, const Separator& b) {
    return a.members == b.members;
  }
};

struct ImplicativeAlgebra {
  ImplicativeStructure structure;
  Separator separator;
};

/// Checks the meet axiom in its finite reduction (binary meets and the empty
/// meet) and returns the structure or the first counterexample.
Expected<ImplicativeStructure> validate_implicative(const FinLattice& L,
                                                    const std::vector<std::vector<int>>& imp);

struct Combinators {
  int k;
  int s;
};
/// K = /\ x->y->x and S = /\ (x->y->z)->(x->y)->x->z, arrows associating
/// to the right, meets over all pairs resp. triples of elements.
Combinators combinators(const ImplicativeStructure& A);

Expected<Separator> validate_separator(const ImplicativeStructure& A,
                                       const std::vector<bool>& members);

/// Least separator containing the generators: worklist fixpoint of upward
/// closure and modus ponens saturation seeded with K and S. When the carrier
/// is small enough the result is certified against the intersection of all
/// separators containing the generators.
Separator separator_closure(const ImplicativeStructure& A, const std::vector<bool>& gens,
                            int certify_cap = 6);

/// Intersection of every valid separator containing the generators; by
/// closure under intersection this is the least one. Exponential in |A|.
Separator least_separator_bruteforce(const ImplicativeStructure& A,
                                     const std::vector<bool>& gens);

Expected<ImplicativeAlgebra> from_heyting(const HeytingAlg& H, const std::vector<bool>& separator);

/// The {top} separator, least in any structure arising from a Heyting algebra.
std::vector<bool> top_only(const FinLattice& L);

struct ClosureSweepResult {
  bool holds = true;
  long long structures = 0;
  long long generator_sets = 0;
  std::string detail;
};

/// Sweeps separator_closure against the intersection oracle over every
/// labeled lattice with carrier <= max_carrier: all valid implication tables
/// when the carrier is <= full_imp_enum_max, otherwise the Heyting table and
/// the constant-top table; every generator subset of every structure.
ClosureSweepResult separator_closure_sweep(int max_carrier, int full_imp_enum_max);

}  // namespace tripos
