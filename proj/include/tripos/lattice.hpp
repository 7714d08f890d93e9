#pragma once

#include <string>
#include <vector>

#include "tripos/common.hpp"
#include "tripos/finset.hpp"

namespace tripos {

/// A finite lattice: a partial order whose binary meets and joins all exist.
/// By finiteness this is automatically a complete lattice; validators reduce
/// completeness to binary plus empty meets/joins, and big_meet/big_join fold
/// over arbitrary subsets. Top and bottom are computed, never positional.
struct FinLattice {
  FinSet elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  int top = -1;
  int bottom = -1;

  int size() const { return elements.size; }
  bool le(int a, int b) const { return leq[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  std::string name(int a) const { return elements.label(a); }
};

/// Builds a lattice from an order matrix, or reports the first offending
/// pair (not a poset, or a missing meet/join).
Expected<FinLattice> validate_lattice(const FinSet& elements,
                                      const std::vector<std::vector<bool>>& leq);

/// Meet of an arbitrary subset, empty subset giving top. Fold order does not
/// matter; the validator guarantees associativity and commutativity.
int big_meet(const FinLattice& L, const std::vector<int>& subset);
int big_join(const FinLattice& L, const std::vector<int>& subset);

/// A Heyting algebra: lattice plus implication right adjoint to meet.
struct HeytingAlg {
  FinLattice lattice;
  std::vector<std::vector<int>> imp;  // imp[a][b] = a -> b
};

/// Computes a -> b := max { c : c /\ a <= b } for every pair, or reports a
/// witness pair whose candidate set has no maximum (non-Heyting lattice).
Expected<HeytingAlg> heyting_from_order(const FinLattice& L);

// Standard small lattices, used across tests and the gallery.
FinLattice chain_lattice(int n);
FinLattice boolean_lattice(int atoms);  // powerset of `atoms` generators
FinLattice diamond_m3();                // bottom, three incomparable, top

/// Every labeled lattice on {0..n-1}: all order matrices that validate.
std::vector<FinLattice> enumerate_labeled_lattices(int n, int cap = 4);

}  // namespace tripos
