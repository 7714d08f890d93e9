#include <doctest.h>

#include "tripos/implicative.hpp"

using namespace tripos;

namespace {

ImplicativeStructure heyting_structure(const FinLattice& L) {
  Expected<HeytingAlg> h = heyting_from_order(L);
  REQUIRE(h.ok());
  Expected<ImplicativeStructure> s = validate_implicative(h->lattice, h->imp);
  REQUIRE(s.ok());
  return *s;
}

}  // namespace

TEST_CASE("validate_implicative accepts Heyting implications") {
  heyting_structure(chain_lattice(2));
  heyting_structure(chain_lattice(3));
  heyting_structure(chain_lattice(4));
  heyting_structure(boolean_lattice(2));
}

TEST_CASE("validate_implicative rejects the all-bottom table") {
  FinLattice c3 = chain_lattice(3);
  std::vector<std::vector<int>> imp(3, std::vector<int>(3, c3.bottom));
  Expected<ImplicativeStructure> s = validate_implicative(c3, imp);
  REQUIRE_FALSE(s.ok());
  CHECK(s.error().find("empty meet") != std::string::npos);
}

TEST_CASE("constant-top table is a valid implicative structure") {
  FinLattice c3 = chain_lattice(3);
  std::vector<std::vector<int>> imp(3, std::vector<int>(3, c3.top));
  CHECK(validate_implicative(c3, imp).ok());
}

TEST_CASE("combinators are top in Heyting algebras") {
  for (const FinLattice& L :
       {chain_lattice(2), chain_lattice(3), chain_lattice(4), boolean_lattice(2)}) {
    ImplicativeStructure A = heyting_structure(L);
    Combinators ks = combinators(A);
    CHECK(ks.k == L.top);
    CHECK(ks.s == L.top);
  }
}

TEST_CASE("combinators agree with the greatest-lower-bound oracle") {
  // independent oracle: the glb of a family is the unique lower bound that
  // dominates every lower bound
  auto glb = [](const FinLattice& L, const std::vector<int>& xs) {
    for (int c = 0; c < L.size(); ++c) {
      bool lower = true;
      for (int x : xs) lower = lower && L.le(c, x);
      if (!lower) continue;
      bool greatest = true;
      for (int d = 0; d < L.size(); ++d) {
        bool dlower = true;
        for (int x : xs) dlower = dlower && L.le(d, x);
        if (dlower && !L.le(d, c)) greatest = false;
      }
      if (greatest) return c;
    }
    return -1;
  };

  FinLattice b4 = boolean_lattice(2);
  ImplicativeStructure A = heyting_structure(b4);
  std::vector<int> kvals, svals;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) kvals.push_back(A.arrow(x, A.arrow(y, x)));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        svals.push_back(A.arrow(A.arrow(x, A.arrow(y, z)),
                                A.arrow(A.arrow(x, y), A.arrow(x, z))));
  CHECK(static_cast<int>(kvals.size()) == 16);
  CHECK(static_cast<int>(svals.size()) == 64);
  Combinators ks = combinators(A);
  CHECK(ks.k == glb(b4, kvals));
  CHECK(ks.s == glb(b4, svals));

  // and the output is below x -> y -> x for every concrete pair
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(b4.le(ks.k, A.arrow(x, A.arrow(y, x))));
}

TEST_CASE("validate_separator") {
  FinLattice c3 = chain_lattice(3);
  ImplicativeStructure A = heyting_structure(c3);

  SUBCASE("whole carrier is a (degenerate) separator") {
    CHECK(validate_separator(A, {true, true, true}).ok());
  }
  SUBCASE("top only") { CHECK(validate_separator(A, top_only(c3)).ok()); }
  SUBCASE("upper set {h, top}, modus ponens brute-forced") {
    std::vector<bool> s = {false, true, true};
    Expected<Separator> sep = validate_separator(A, s);
    // oracle: scan the full MP table
    bool mp_ok = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (s[a] && s[A.arrow(a, b)] && !s[b]) mp_ok = false;
    CHECK(mp_ok);
    CHECK(sep.ok());
  }
  SUBCASE("violations are reported with witnesses") {
    Expected<Separator> down = validate_separator(A, {true, false, true});
    REQUIRE_FALSE(down.ok());
    CHECK(down.error().find("not upward closed") != std::string::npos);
    Expected<Separator> empty = validate_separator(A, {false, false, false});
    REQUIRE_FALSE(empty.ok());
    CHECK(empty.error().find("combinator") != std::string::npos);
  }
}

TEST_CASE("separator_closure basics") {
  FinLattice b2 = chain_lattice(2);
  ImplicativeStructure A2 = heyting_structure(b2);
  CHECK(separator_closure(A2, {false, false}).members == std::vector<bool>{false, true});
  CHECK(separator_closure(A2, {true, false}).members == std::vector<bool>{true, true});

  for (const FinLattice& L : {chain_lattice(3), boolean_lattice(2)}) {
    ImplicativeStructure A = heyting_structure(L);
    Separator least = separator_closure(A, std::vector<bool>(L.size(), false));
    CHECK(least.contains(L.top));
  }
}

TEST_CASE("separator_closure is idempotent and monotone on small algebras") {
  for (const FinLattice& L : {chain_lattice(2), chain_lattice(3), chain_lattice(4),
                              boolean_lattice(2)}) {
    ImplicativeStructure A = heyting_structure(L);
    int n = L.size();
    for (int code = 0; code < (1 << n); ++code) {
      std::vector<bool> gens(n);
      for (int a = 0; a < n; ++a) gens[a] = (code >> a) & 1;
      Separator once = separator_closure(A, gens);
      CHECK(separator_closure(A, once.members) == once);
      for (int code2 = 0; code2 < (1 << n); ++code2) {
        bool super = (code2 & code) == code;
        if (!super) continue;
        std::vector<bool> gens2(n);
        for (int a = 0; a < n; ++a) gens2[a] = (code2 >> a) & 1;
        Separator bigger = separator_closure(A, gens2);
        for (int a = 0; a < n; ++a)
          if (once.contains(a)) CHECK(bigger.contains(a));
      }
    }
  }
}

TEST_CASE("separator_closure matches the intersection oracle (sweep, |A| <= 3)") {
  ClosureSweepResult r = separator_closure_sweep(3, 3);
  CHECK(r.holds);
  CHECK(r.structures > 0);
}

TEST_CASE("from_heyting") {
  Expected<HeytingAlg> h2 = heyting_from_order(chain_lattice(2));
  REQUIRE(h2.ok());
  CHECK(from_heyting(*h2, top_only(h2->lattice)).ok());

  Expected<HeytingAlg> h3 = heyting_from_order(chain_lattice(3));
  REQUIRE(h3.ok());
  CHECK(from_heyting(*h3, top_only(h3->lattice)).ok());

  // non-Heyting lattices fail upstream
  CHECK_FALSE(heyting_from_order(diamond_m3()).ok());
}
