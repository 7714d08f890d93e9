#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tripos/common.hpp"
#include "tripos/finset.hpp"
#include "tripos/implicative.hpp"

namespace tripos {

/// Bounds on fiber enumeration and carrier construction. Operations that
/// would exceed them throw CapExceeded rather than grind.
struct EnumCaps {
  long long max_fiber = 1LL << 20;    // number of predicates in an enumerated fiber
  long long max_carrier = 1LL << 20;  // size of F(I) for the power flavor
};

/// An executable fibered preorder over finite sets.
///
/// Two concrete families are supported:
///  - power flavor with exponent n: fibers are subsets of F(I) = I^n,
///    reindexing is inverse image along u^n ("identity" names exponent 1);
///  - implicative flavor over an algebra (A, ->, S): fibers are tables
///    I -> A, entailment is /\(phi_i -> psi_i) in S, reindexing is
///    precomposition.
struct TriposInstance {
  int power_exponent = 0;                     // >= 1 iff power flavor
  std::optional<ImplicativeAlgebra> algebra;  // engaged iff implicative flavor
  EnumCaps caps;

  // Pointwise connective tables, precomputed for the implicative flavor:
  // a /\ b := /\_c ((a -> b -> c) -> c),  a \/ b := /\_c ((a->c) -> (b->c) -> c).
  std::vector<std::vector<int>> and_table;
  std::vector<std::vector<int>> or_table;

  bool is_power() const { return power_exponent >= 1; }
  bool is_implicative() const { return algebra.has_value(); }
  std::string flavor_name() const;
};

TriposInstance make_power_tripos(int exponent, EnumCaps caps = {});
TriposInstance make_identity_tripos(EnumCaps caps = {});
TriposInstance make_implicative_tripos(ImplicativeAlgebra alg, EnumCaps caps = {});

/// A fiber element over a finite index set: a subobject of F(index) for the
/// power flavor, or a table index -> algebra element for the implicative one.
struct Predicate {
  FinSet index;
  std::variant<Subobject, std::vector<int>> payload;

  bool is_sub() const { return std::holds_alternative<Subobject>(payload); }
  const Subobject& sub() const { return std::get<Subobject>(payload); }
  const std::vector<int>& table() const { return std::get<std::vector<int>>(payload); }

  /// Raw payload equality, finer than mutual entailment.
  friend bool operator==(const Predicate& a, const Predicate& b) {
    return a.index == b.index && a.payload == b.payload;
  }
};

/// F(I): the carrier whose subsets form the fiber (power flavor only).
FinSet f_object(const TriposInstance& T, const FinSet& I);
/// F(u) = u^n (power flavor only).
FinMap f_map(const TriposInstance& T, const FinMap& u);

long long fiber_size(const TriposInstance& T, const FinSet& I);

/// Complete, duplicate-free fiber enumeration in lexicographic payload order.
std::vector<Predicate> fiber_enumerate(const TriposInstance& T, const FinSet& I);
/// The k-th predicate of the enumeration, without materializing the fiber.
Predicate fiber_element(const TriposInstance& T, const FinSet& I, long long k);
long long fiber_rank(const TriposInstance& T, const Predicate& p);

Predicate top_pred(const TriposInstance& T, const FinSet& I);
Predicate bot_pred(const TriposInstance& T, const FinSet& I);
Predicate and_pred(const TriposInstance& T, const Predicate& a, const Predicate& b);
Predicate or_pred(const TriposInstance& T, const Predicate& a, const Predicate& b);
Predicate imp_pred(const TriposInstance& T, const Predicate& a, const Predicate& b);

/// phi over D from a plain subset D of the index set: membership of F-tuples
/// coordinatewise for the power flavor, a top/bottom table for the
/// implicative one. Used for constant-object equalities and graphs.
Predicate pointwise_predicate(const TriposInstance& T, const Subobject& which);

bool entails(const TriposInstance& T, const Predicate& a, const Predicate& b);
bool equiv(const TriposInstance& T, const Predicate& a, const Predicate& b);

/// Compact payload rendering for witnesses and reports.
std::string pred_str(const Predicate& p);

Predicate reindex(const TriposInstance& T, const Predicate& phi, const FinMap& u);
Predicate exists_along(const TriposInstance& T, const FinMap& u, const Predicate& phi);
Predicate forall_along(const TriposInstance& T, const FinMap& u, const Predicate& phi);

/// A commuting square over the cospan f : X -> Z <- Y : g, with apex legs
/// to_x : P -> X and to_y : P -> Y.
struct CospanSquare {
  FinMap f;
  FinMap g;
  FinMap to_x;
  FinMap to_y;
};

/// True when the square commutes and its apex is the cospan's pullback
/// (the canonical comparison map is an isomorphism).
Expected<bool> validate_pullback_square(const CospanSquare& sq);
CospanSquare canonical_pullback_square(const FinMap& f, const FinMap& g);

struct BeckChevalleyResult {
  bool holds = false;
  std::string counterwitness;  // empty when holds
};
/// Checks reindex(exists_f phi, g) -||- exists_{to_y} reindex(phi, to_x)
/// and the dual for forall, on a validated pullback square.
BeckChevalleyResult beck_chevalley_check(const TriposInstance& T, const CospanSquare& sq,
                                         const Predicate& phi);

struct PrestackResult {
  bool holds = false;
  std::string counterwitness;
};
/// Reindexing along the epi reflects the fiber order: for all phi, psi over
/// cod(e), e*phi |- e*psi implies phi |- psi.
PrestackResult prestack_check(const TriposInstance& T, const FinMap& e);

}  // namespace tripos
