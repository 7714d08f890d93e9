#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tripos/common.hpp"

namespace tripos {

/// A finite set with elements canonically 0..size-1. Labels are display-only;
/// two objects of equal size are the same object.
struct FinSet {
  int size = 0;
  std::vector<std::string> labels;  // empty, or one name per element

  FinSet() = default;
  explicit FinSet(int n) : size(n) {}
  FinSet(int n, std::vector<std::string> names);

  std::string label(int x) const;
  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size == b.size; }
};

/// A total function between finite sets, given by its value table.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;  // table[x] < cod.size for all x

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::vector<int> t);

  int operator()(int x) const { return table[static_cast<size_t>(x)]; }
  friend bool operator==(const FinMap& f, const FinMap& g) {
    return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
  }
};

FinMap identity_map(const FinSet& X);
FinMap constant_map(const FinSet& X, const FinSet& Y, int y);

/// g after f. Throws std::invalid_argument on a boundary mismatch.
FinMap compose(const FinMap& f, const FinMap& g);

struct EpiMono {
  bool is_epi = false;
  bool is_mono = false;
  bool is_iso = false;
};
EpiMono epi_mono(const FinMap& f);

/// Epi-mono factorization m . e = f. The image object is canonicalized by
/// sorted range values, so the output is deterministic.
struct ImageFactorization {
  FinMap epi;   // dom(f) ->> image
  FinMap mono;  // image >-> cod(f)
};
ImageFactorization image_factorization(const FinMap& f);

// ---------------------------------------------------------------------------
// Finite limits.
//
// Every constructed apex carries the tuple of leg values for each element,
// in lexicographic order, so diagram equality is decidable bit-for-bit and
// the mediating map of a cone can be computed by tuple lookup.
// ---------------------------------------------------------------------------

struct LimitCone {
  FinSet apex;
  std::vector<FinMap> legs;                // apex -> X_k
  std::vector<std::vector<int>> tuples;    // tuples[a][k] = legs[k](a)

  /// Unique factorization of a cone through the apex, or nullopt when some
  /// cone tuple misses the apex (the cone does not satisfy the diagram's
  /// equations). Uniqueness is forced: distinct apex elements have distinct
  /// tuples.
  std::optional<FinMap> mediate(const std::vector<FinMap>& cone) const;
};

LimitCone terminal_limit();
LimitCone product_limit(const std::vector<FinSet>& factors);
LimitCone equalizer_limit(const FinMap& f, const FinMap& g);
LimitCone pullback_limit(const FinMap& f, const FinMap& g);  // cospan f:X->Z, g:Y->Z

/// Row-major pairing for product objects: (x, y) <-> x * |Y| + y.
inline int pair_encode(int x, int y, int y_size) { return x * y_size + y; }
inline std::pair<int, int> pair_decode(int z, int y_size) {
  return {z / y_size, z % y_size};
}
FinSet product_object(const FinSet& X, const FinSet& Y);
FinMap product_proj1(const FinSet& X, const FinSet& Y);
FinMap product_proj2(const FinSet& X, const FinSet& Y);
/// Pairing <f, g> : A -> X x Y of two maps with a common domain.
FinMap pair_map(const FinMap& f, const FinMap& g);
/// f x g : X x Y -> X' x Y'.
FinMap product_map(const FinMap& f, const FinMap& g);
FinMap diagonal_map(const FinSet& X);  // X -> X x X

/// From the row-major product of `shape`, the map selecting the listed
/// coordinates (repeats allowed) into the row-major product of their sorts.
FinMap select_coords(const std::vector<FinSet>& shape, const std::vector<int>& pick);

/// The n-fold power X^n with lexicographic tuple encoding, and u^n acting
/// coordinatewise. power_object(X, 1) is X itself up to encoding.
FinSet power_object(const FinSet& X, int n, long long cap = 1 << 20);
FinMap power_map(const FinMap& u, int n, long long cap = 1 << 20);

// ---------------------------------------------------------------------------
// Subobjects and powersets.
// ---------------------------------------------------------------------------

/// A subobject of a finite set, as a membership mask.
struct Subobject {
  FinSet ambient;
  std::vector<bool> members;  // members.size() == ambient.size

  Subobject() = default;
  Subobject(FinSet amb, std::vector<bool> mask);

  bool contains(int x) const { return members[static_cast<size_t>(x)]; }
  int count() const;
  friend bool operator==(const Subobject& a, const Subobject& b) {
    return a.ambient == b.ambient && a.members == b.members;
  }
};

Subobject empty_subobject(const FinSet& X);
Subobject full_subobject(const FinSet& X);
bool sub_leq(const Subobject& a, const Subobject& b);
Subobject sub_meet(const Subobject& a, const Subobject& b);
Subobject sub_join(const Subobject& a, const Subobject& b);

/// All 2^|X| subobjects in mask-counting order (bit x of the counter is
/// membership of element x). Throws CapExceeded past `cap` elements of X.
std::vector<Subobject> subobject_lattice(const FinSet& X, int cap = 16);

/// The membership relation of X inside X x P(X). Subsets U of X are encoded
/// as integers with bit x set iff x is a member.
struct MembershipRel {
  FinSet base;
  FinSet power;      // size 2^|base|
  Subobject pairs;   // subobject of base x power, row-major pairing
};
MembershipRel powerset_membership(const FinSet& X, int cap = 16);

bool subset_code_contains(long long code, int x);

// ---------------------------------------------------------------------------
// Enumeration helpers. All orders are lexicographic and deterministic.
// ---------------------------------------------------------------------------

std::vector<FinMap> all_maps(const FinSet& A, const FinSet& B, long long cap = 1 << 22);
std::vector<FinMap> all_epis(const FinSet& A, const FinSet& B, long long cap = 1 << 22);
std::vector<FinMap> all_monos(const FinSet& A, const FinSet& B, long long cap = 1 << 22);

}  // namespace tripos
