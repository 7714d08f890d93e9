#include "tripos/implicative.hpp"

#include <algorithm>
#include <stdexcept>

namespace tripos {

int Separator::count() const {
  return static_cast<int>(std::count(members.begin(), members.end(), true));
}

Expected<ImplicativeStructure> validate_implicative(const FinLattice& L,
                                                    const std::vector<std::vector<int>>& imp) {
  int n = L.size();
  if (static_cast<int>(imp.size()) != n)
    return Expected<ImplicativeStructure>::failure("imp table shape mismatch");
  for (const auto& row : imp) {
    if (static_cast<int>(row.size()) != n)
      return Expected<ImplicativeStructure>::failure("imp table shape mismatch");
    for (int v : row)
      if (v < 0 || v >= n)
        return Expected<ImplicativeStructure>::failure("imp table entry out of range");
  }
  auto arrow = [&](int a, int b) { return imp[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  for (int x = 0; x < n; ++x)
    if (arrow(x, L.top) != L.top)
      return Expected<ImplicativeStructure>::failure(
          "meet axiom fails at empty meet: " + L.name(x) + " -> top != top");
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = arrow(x, L.meet[static_cast<size_t>(a)][static_cast<size_t>(b)]);
        int rhs = L.meet[static_cast<size_t>(arrow(x, a))][static_cast<size_t>(arrow(x, b))];
        if (lhs != rhs)
          return Expected<ImplicativeStructure>::failure(
              "meet axiom fails at (" + L.name(x) + "," + L.name(a) + "," + L.name(b) + ")");
      }
  return ImplicativeStructure{L, imp};
}

Combinators combinators(const ImplicativeStructure& A) {
  const FinLattice& L = A.lattice;
  int n = A.size();
  std::vector<int> ks;
  std::vector<int> ss;
  ks.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ks.push_back(A.arrow(x, A.arrow(y, x)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = A.arrow(x, A.arrow(y, z));
        int rhs = A.arrow(A.arrow(x, y), A.arrow(x, z));
        ss.push_back(A.arrow(lhs, rhs));
      }
  return {big_meet(L, ks), big_meet(L, ss)};
}

Expected<Separator> validate_separator(const ImplicativeStructure& A,
                                       const std::vector<bool>& members) {
  const FinLattice& L = A.lattice;
  int n = A.size();
  if (static_cast<int>(members.size()) != n)
    return Expected<Separator>::failure("separator mask shape mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (members[static_cast<size_t>(a)] && L.le(a, b) && !members[static_cast<size_t>(b)])
        return Expected<Separator>::failure("not upward closed: " + L.name(a) + " <= " +
                                            L.name(b) + " but " + L.name(b) + " missing");
  Combinators ks = combinators(A);
  if (!members[static_cast<size_t>(ks.k)])
    return Expected<Separator>::failure("missing combinator K = " + L.name(ks.k));
  if (!members[static_cast<size_t>(ks.s)])
    return Expected<Separator>::failure("missing combinator S = " + L.name(ks.s));
  for (int a = 0; a < n; ++a) {
    if (!members[static_cast<size_t>(a)]) continue;
    for (int b = 0; b < n; ++b)
      if (members[static_cast<size_t>(A.arrow(a, b))] && !members[static_cast<size_t>(b)])
        return Expected<Separator>::failure("modus ponens fails: " + L.name(a) + " and " +
                                            L.name(a) + " -> " + L.name(b) + " in S, " +
                                            L.name(b) + " not");
  }
  return Separator{members};
}

Separator separator_closure(const ImplicativeStructure& A, const std::vector<bool>& gens,
                            int certify_cap) {
  const FinLattice& L = A.lattice;
  int n = A.size();
  if (static_cast<int>(gens.size()) != n)
    throw std::invalid_argument("separator_closure: generator mask shape mismatch");
  std::vector<bool> s(gens);
  Combinators ks = combinators(A);
  s[static_cast<size_t>(ks.k)] = true;
  s[static_cast<size_t>(ks.s)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!s[static_cast<size_t>(a)]) continue;
      for (int b = 0; b < n; ++b) {
        if (s[static_cast<size_t>(b)]) continue;
        bool up = L.le(a, b);
        bool mp = s[static_cast<size_t>(A.arrow(a, b))];
        if (up || mp) {
          s[static_cast<size_t>(b)] = true;
          changed = true;
        }
      }
    }
  }
  Separator result{s};
  if (n <= certify_cap && !(result == least_separator_bruteforce(A, gens)))
    throw std::logic_error("separator_closure: fixpoint disagrees with intersection oracle");
  return result;
}

Separator least_separator_bruteforce(const ImplicativeStructure& A,
                                     const std::vector<bool>& gens) {
  int n = A.size();
  std::vector<bool> meet(static_cast<size_t>(n), true);  // whole carrier is a separator
  for (long long code = 0; code < (1LL << n); ++code) {
    std::vector<bool> cand(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) cand[static_cast<size_t>(a)] = (code >> a) & 1;
    bool covers = true;
    for (int a = 0; a < n; ++a)
      if (gens[static_cast<size_t>(a)] && !cand[static_cast<size_t>(a)]) covers = false;
    if (!covers || !validate_separator(A, cand)) continue;
    for (int a = 0; a < n; ++a)
      meet[static_cast<size_t>(a)] = meet[static_cast<size_t>(a)] && cand[static_cast<size_t>(a)];
  }
  return Separator{meet};
}

Expected<ImplicativeAlgebra> from_heyting(const HeytingAlg& H,
                                          const std::vector<bool>& separator) {
  Expected<ImplicativeStructure> s = validate_implicative(H.lattice, H.imp);
  if (!s) return Expected<ImplicativeAlgebra>::failure(s.error());
  Expected<Separator> sep = validate_separator(*s, separator);
  if (!sep) return Expected<ImplicativeAlgebra>::failure(sep.error());
  return ImplicativeAlgebra{*s, *sep};
}

std::vector<bool> top_only(const FinLattice& L) {
  std::vector<bool> s(static_cast<size_t>(L.size()), false);
  s[static_cast<size_t>(L.top)] = true;
  return s;
}

ClosureSweepResult separator_closure_sweep(int max_carrier, int full_imp_enum_max) {
  ClosureSweepResult out;
  for (int n = 1; n <= max_carrier; ++n) {
    for (const FinLattice& L : enumerate_labeled_lattices(n, max_carrier)) {
      std::vector<ImplicativeStructure> structures;
      if (n <= full_imp_enum_max) {
        // Every implication table satisfying the meet axiom.
        long long cells = static_cast<long long>(n) * n;
        long long total = 1;
        for (long long k = 0; k < cells; ++k) total *= n;
        for (long long code = 0; code < total; ++code) {
          std::vector<std::vector<int>> imp(static_cast<size_t>(n),
                                            std::vector<int>(static_cast<size_t>(n), 0));
          long long rest = code;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              imp[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(rest % n);
              rest /= n;
            }
          Expected<ImplicativeStructure> s = validate_implicative(L, imp);
          if (s) structures.push_back(*s);
        }
      } else {
        Expected<HeytingAlg> hey = heyting_from_order(L);
        if (hey) {
          Expected<ImplicativeStructure> s = validate_implicative(hey->lattice, hey->imp);
          if (s) structures.push_back(*s);
        }
        std::vector<std::vector<int>> const_top(
            static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), L.top));
        Expected<ImplicativeStructure> s = validate_implicative(L, const_top);
        if (s) structures.push_back(*s);
      }
      for (const ImplicativeStructure& A : structures) {
        ++out.structures;
        for (long long code = 0; code < (1LL << n); ++code) {
          std::vector<bool> gens(static_cast<size_t>(n));
          for (int a = 0; a < n; ++a) gens[static_cast<size_t>(a)] = (code >> a) & 1;
          ++out.generator_sets;
          Separator fix = separator_closure(A, gens, /*certify_cap=*/0);
          Separator oracle = least_separator_bruteforce(A, gens);
          if (!(fix == oracle)) {
            out.holds = false;
            out.detail = "closure disagrees with the intersection oracle on a carrier of size " +
                         std::to_string(n);
            return out;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace tripos
