#include "tripos/lattice.hpp"

#include <stdexcept>

namespace tripos {

namespace {

std::string pair_str(const FinSet& els, int a, int b) {
  return "(" + els.label(a) + "," + els.label(b) + ")";
}

}  // namespace

Expected<FinLattice> validate_lattice(const FinSet& elements,
                                      const std::vector<std::vector<bool>>& leq) {
  int n = elements.size;
  if (static_cast<int>(leq.size()) != n)
    return Expected<FinLattice>::failure("leq matrix is not square of element count");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      return Expected<FinLattice>::failure("leq matrix is not square of element count");

  for (int a = 0; a < n; ++a)
    if (!leq[a][a])
      return Expected<FinLattice>::failure("not a poset: missing reflexivity at " +
                                           elements.label(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        return Expected<FinLattice>::failure("not a poset: antisymmetry fails at " +
                                             pair_str(elements, a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          return Expected<FinLattice>::failure("not a poset: transitivity fails at " +
                                               pair_str(elements, a, b) + "," +
                                               elements.label(c));

  auto bound = [&](int a, int b, bool lower) -> int {
    // Greatest lower / least upper bound of {a, b}, or -1 if none.
    int best = -1;
    for (int c = 0; c < n; ++c) {
      bool is_bound = lower ? (leq[c][a] && leq[c][b]) : (leq[a][c] && leq[b][c]);
      if (!is_bound) continue;
      if (best == -1)
        best = c;
      else if (lower ? leq[best][c] : leq[c][best])
        best = c;
    }
    if (best == -1) return -1;
    for (int c = 0; c < n; ++c) {
      bool is_bound = lower ? (leq[c][a] && leq[c][b]) : (leq[a][c] && leq[b][c]);
      if (is_bound && !(lower ? leq[c][best] : leq[best][c])) return -1;
    }
    return best;
  };

  FinLattice L;
  L.elements = elements;
  L.leq = leq;
  L.meet.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  L.join = L.meet;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int j = bound(a, b, false);
      if (j == -1)
        return Expected<FinLattice>::failure("missing join of " + pair_str(elements, a, b));
      int m = bound(a, b, true);
      if (m == -1)
        return Expected<FinLattice>::failure("missing meet of " + pair_str(elements, a, b));
      L.meet[static_cast<size_t>(a)][static_cast<size_t>(b)] = m;
      L.join[static_cast<size_t>(a)][static_cast<size_t>(b)] = j;
    }

  if (n == 0) return Expected<FinLattice>::failure("empty carrier has no top/bottom");
  L.top = 0;
  L.bottom = 0;
  for (int a = 1; a < n; ++a) {
    L.top = L.join[static_cast<size_t>(L.top)][static_cast<size_t>(a)];
    L.bottom = L.meet[static_cast<size_t>(L.bottom)][static_cast<size_t>(a)];
  }
  return L;
}

int big_meet(const FinLattice& L, const std::vector<int>& subset) {
  int acc = L.top;
  for (int a : subset) acc = L.meet[static_cast<size_t>(acc)][static_cast<size_t>(a)];
  return acc;
}

int big_join(const FinLattice& L, const std::vector<int>& subset) {
  int acc = L.bottom;
  for (int a : subset) acc = L.join[static_cast<size_t>(acc)][static_cast<size_t>(a)];
  return acc;
}

Expected<HeytingAlg> heyting_from_order(const FinLattice& L) {
  int n = L.size();
  std::vector<std::vector<int>> imp(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        int ca = L.meet[static_cast<size_t>(c)][static_cast<size_t>(a)];
        if (!L.le(ca, b)) continue;
        if (best == -1 || L.le(best, c)) best = c;
      }
      // best is only a maximum if it dominates every candidate
      for (int c = 0; c < n; ++c) {
        int ca = L.meet[static_cast<size_t>(c)][static_cast<size_t>(a)];
        if (L.le(ca, b) && !L.le(c, best)) {
          return Expected<HeytingAlg>::failure(
              "not Heyting: no maximum candidate for " + L.name(a) + " -> " + L.name(b));
        }
      }
      imp[static_cast<size_t>(a)][static_cast<size_t>(b)] = best;
    }
  return HeytingAlg{L, std::move(imp)};
}

namespace {

FinLattice from_leq_or_die(const FinSet& els, const std::vector<std::vector<bool>>& leq) {
  Expected<FinLattice> r = validate_lattice(els, leq);
  if (!r) throw std::logic_error("builtin lattice failed validation: " + r.error());
  return *r;
}

}  // namespace

FinLattice chain_lattice(int n) {
  FinSet els(n);
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  return from_leq_or_die(els, leq);
}

FinLattice boolean_lattice(int atoms) {
  int n = 1 << atoms;
  FinSet els(n);
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = ((a & b) == a);
  return from_leq_or_die(els, leq);
}

FinLattice diamond_m3() {
  // 0 bottom, 1..3 incomparable, 4 top
  int n = 5;
  FinSet els(n, {"bot", "a", "b", "c", "top"});
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a) leq[static_cast<size_t>(a)][static_cast<size_t>(a)] = true;
  for (int a = 0; a < n; ++a) {
    leq[0][static_cast<size_t>(a)] = true;
    leq[static_cast<size_t>(a)][4] = true;
  }
  return from_leq_or_die(els, leq);
}

std::vector<FinLattice> enumerate_labeled_lattices(int n, int cap) {
  if (n > cap) throw CapExceeded("enumerate_labeled_lattices: size exceeds cap");
  std::vector<FinLattice> out;
  if (n == 0) return out;
  int cells = n * n;
  FinSet els(n);
  for (long long code = 0; code < (1LL << cells); ++code) {
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = (code >> (a * n + b)) & 1;
    Expected<FinLattice> r = validate_lattice(els, leq);
    if (r) out.push_back(*r);
  }
  return out;
}

}  // namespace tripos
