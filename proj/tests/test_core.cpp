#include <doctest.h>

#include "tripos/core.hpp"
#include "tripos/textio.hpp"

using namespace tripos;

namespace {

TriposInstance chain3_tripos() {
  Expected<ImplicativeAlgebra> alg = builtin_algebra("chain3");
  REQUIRE(alg.ok());
  return make_implicative_tripos(*alg);
}

}  // namespace

TEST_CASE("fiber sizes and enumeration") {
  TriposInstance id = make_identity_tripos();
  CHECK(fiber_enumerate(id, FinSet(2)).size() == 4);

  TriposInstance p2 = make_power_tripos(2);
  CHECK(fiber_enumerate(p2, FinSet(2)).size() == 16);

  TriposInstance chain = chain3_tripos();
  CHECK(fiber_enumerate(chain, FinSet(2)).size() == 9);

  // over the empty index the fiber is a single predicate
  CHECK(fiber_enumerate(id, FinSet(0)).size() == 1);
  CHECK(fiber_enumerate(chain, FinSet(0)).size() == 1);
}

TEST_CASE("fiber enumeration is lexicographic and rank-consistent") {
  TriposInstance id = make_identity_tripos();
  std::vector<Predicate> fib = fiber_enumerate(id, FinSet(2));
  CHECK(fib[0].sub().members == std::vector<bool>{false, false});
  CHECK(fib[1].sub().members == std::vector<bool>{false, true});
  CHECK(fib[2].sub().members == std::vector<bool>{true, false});
  CHECK(fib[3].sub().members == std::vector<bool>{true, true});
  for (long long k = 0; k < 4; ++k) CHECK(fiber_rank(id, fib[static_cast<size_t>(k)]) == k);

  TriposInstance chain = chain3_tripos();
  std::vector<Predicate> cfib = fiber_enumerate(chain, FinSet(2));
  CHECK(cfib[0].table() == std::vector<int>{0, 0});
  CHECK(cfib[1].table() == std::vector<int>{0, 1});
  CHECK(cfib[3].table() == std::vector<int>{1, 0});
  for (long long k = 0; k < 9; ++k) CHECK(fiber_rank(chain, cfib[static_cast<size_t>(k)]) == k);
}

TEST_CASE("reindex") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("along the identity is the identity") {
    for (const Predicate& p : fiber_enumerate(id, FinSet(3)))
      CHECK(reindex(id, p, identity_map(FinSet(3))) == p);
  }
  SUBCASE("elementwise preimage for the identity flavor") {
    Predicate phi{FinSet(2), Subobject(FinSet(2), {false, true})};  // {1} in 2
    FinMap u(FinSet(3), FinSet(2), {1, 1, 0});
    Predicate pulled = reindex(id, phi, u);
    CHECK(pulled.sub().members == std::vector<bool>{true, true, false});
    // oracle: x in pulled iff u(x) in phi
    for (int x = 0; x < 3; ++x) CHECK(pulled.sub().contains(x) == phi.sub().contains(u(x)));
  }
  SUBCASE("constant predicates reindex to constants (implicative)") {
    TriposInstance chain = chain3_tripos();
    Predicate c{FinSet(2), std::vector<int>{1, 1}};
    FinMap u(FinSet(3), FinSet(2), {0, 1, 0});
    CHECK(reindex(chain, c, u).table() == std::vector<int>{1, 1, 1});
  }
  SUBCASE("sort mismatch throws") {
    Predicate phi{FinSet(2), Subobject(FinSet(2), {false, true})};
    CHECK_THROWS_AS(reindex(id, phi, identity_map(FinSet(3))), std::invalid_argument);
  }
}

TEST_CASE("entails") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("reflexive") {
    for (const Predicate& p : fiber_enumerate(id, FinSet(3))) CHECK(entails(id, p, p));
  }
  SUBCASE("subset inclusion") {
    Predicate a{FinSet(2), Subobject(FinSet(2), {true, false})};
    Predicate b{FinSet(2), Subobject(FinSet(2), {true, true})};
    CHECK(entails(id, a, b));
    CHECK_FALSE(entails(id, b, a));
  }
  SUBCASE("implicative with S = {top} is pointwise lattice order") {
    TriposInstance chain = chain3_tripos();
    const FinLattice& L = chain.algebra->structure.lattice;
    for (int isize = 0; isize <= 2; ++isize) {
      std::vector<Predicate> fib = fiber_enumerate(chain, FinSet(isize));
      for (const Predicate& a : fib)
        for (const Predicate& b : fib) {
          bool pointwise = true;
          for (int i = 0; i < isize; ++i)
            pointwise = pointwise &&
                        L.le(a.table()[static_cast<size_t>(i)], b.table()[static_cast<size_t>(i)]);
          CHECK(entails(chain, a, b) == pointwise);
        }
    }
  }
}

TEST_CASE("fiber operations") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("and with top is the identity up to mutual entailment") {
    for (const Predicate& p : fiber_enumerate(id, FinSet(2)))
      CHECK(equiv(id, and_pred(id, p, top_pred(id, FinSet(2))), p));
  }
  SUBCASE("and is intersection for the identity flavor") {
    std::vector<Predicate> fib = fiber_enumerate(id, FinSet(2));
    for (const Predicate& a : fib)
      for (const Predicate& b : fib) {
        Predicate m = and_pred(id, a, b);
        for (int x = 0; x < 2; ++x)
          CHECK(m.sub().contains(x) == (a.sub().contains(x) && b.sub().contains(x)));
      }
  }
  SUBCASE("identity flavor reproduces the subset model for every connective") {
    std::vector<Predicate> fib = fiber_enumerate(id, FinSet(3));
    for (const Predicate& a : fib)
      for (const Predicate& b : fib) {
        Predicate j = or_pred(id, a, b);
        Predicate m = imp_pred(id, a, b);
        for (int x = 0; x < 3; ++x) {
          CHECK(j.sub().contains(x) == (a.sub().contains(x) || b.sub().contains(x)));
          CHECK(m.sub().contains(x) == (!a.sub().contains(x) || b.sub().contains(x)));
        }
      }
    FinMap u(FinSet(3), FinSet(2), {0, 1, 1});
    for (const Predicate& a : fib) {
      Predicate ex = exists_along(id, u, a);
      Predicate all = forall_along(id, u, a);
      for (int y = 0; y < 2; ++y) {
        bool some = false, every = true;
        for (int x = 0; x < 3; ++x)
          if (u(x) == y) {
            some = some || a.sub().contains(x);
            every = every && a.sub().contains(x);
          }
        CHECK(ex.sub().contains(y) == some);
        CHECK(all.sub().contains(y) == every);
      }
    }
  }
  SUBCASE("encoded meet is the pointwise lattice meet for Heyting chain") {
    TriposInstance chain = chain3_tripos();
    const FinLattice& L = chain.algebra->structure.lattice;
    for (int isize = 0; isize <= 2; ++isize) {
      std::vector<Predicate> fib = fiber_enumerate(chain, FinSet(isize));
      for (const Predicate& a : fib)
        for (const Predicate& b : fib) {
          Predicate enc = and_pred(chain, a, b);
          std::vector<int> pw(a.table().size());
          for (size_t i = 0; i < pw.size(); ++i)
            pw[i] = L.meet[static_cast<size_t>(a.table()[i])][static_cast<size_t>(b.table()[i])];
          CHECK(equiv(chain, enc, Predicate{a.index, pw}));
        }
    }
  }
}

TEST_CASE("quantifiers") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("along the identity map both quantifiers are the identity") {
    for (const Predicate& p : fiber_enumerate(id, FinSet(2))) {
      CHECK(exists_along(id, identity_map(FinSet(2)), p) == p);
      CHECK(forall_along(id, identity_map(FinSet(2)), p) == p);
    }
  }
  SUBCASE("image along the terminal map") {
    FinMap bang(FinSet(2), FinSet(1), {0, 0});
    Predicate phi{FinSet(2), Subobject(FinSet(2), {false, true})};
    CHECK(exists_along(id, bang, phi).sub().members == std::vector<bool>{true});
    CHECK(forall_along(id, bang, phi).sub().members == std::vector<bool>{false});
  }
  SUBCASE("implicative forall along the terminal map is the meet") {
    TriposInstance chain = chain3_tripos();
    const FinLattice& L = chain.algebra->structure.lattice;
    FinMap bang(FinSet(2), FinSet(1), {0, 0});
    for (const Predicate& p : fiber_enumerate(chain, FinSet(2))) {
      Predicate all = forall_along(chain, bang, p);
      CHECK(all.table()[0] == L.meet[static_cast<size_t>(p.table()[0])]
                                    [static_cast<size_t>(p.table()[1])]);
    }
  }
  SUBCASE("quantifiers along maps out of the empty set") {
    TriposInstance chain = chain3_tripos();
    const FinLattice& L = chain.algebra->structure.lattice;
    FinMap from_empty(FinSet(0), FinSet(2), {});
    Predicate empty_pred{FinSet(0), std::vector<int>{}};
    Predicate ex = exists_along(chain, from_empty, empty_pred);
    Predicate all = forall_along(chain, from_empty, empty_pred);
    for (int j = 0; j < 2; ++j) {
      CHECK(ex.table()[static_cast<size_t>(j)] == L.bottom);
      CHECK(all.table()[static_cast<size_t>(j)] == L.top);
    }
  }
}

TEST_CASE("pullback square validation") {
  FinMap f(FinSet(2), FinSet(2), {0, 1});
  CospanSquare ok = canonical_pullback_square(f, f);
  CHECK(validate_pullback_square(ok).ok());

  // a commuting square that is not a pullback: apex too small
  FinMap bx(FinSet(2), FinSet(1), {0, 0});
  CospanSquare not_pb{bx, bx, FinMap(FinSet(1), FinSet(2), {0}), FinMap(FinSet(1), FinSet(2), {0})};
  Expected<bool> r = validate_pullback_square(not_pb);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().find("not iso") != std::string::npos);

  Predicate phi{FinSet(2), Subobject(FinSet(2), {true, false})};
  CHECK_THROWS_AS(beck_chevalley_check(make_identity_tripos(), not_pb, phi),
                  std::invalid_argument);
}

TEST_CASE("beck-chevalley on identity squares") {
  TriposInstance id = make_identity_tripos();
  FinMap f = identity_map(FinSet(2));
  CospanSquare sq = canonical_pullback_square(f, f);
  for (const Predicate& phi : fiber_enumerate(id, FinSet(2)))
    CHECK(beck_chevalley_check(id, sq, phi).holds);
}

TEST_CASE("prestack check") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("identity epi is vacuously fine") {
    CHECK(prestack_check(id, identity_map(FinSet(2))).holds);
  }
  SUBCASE("identity flavor on every small epi") {
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const FinMap& e : all_epis(FinSet(a), FinSet(b)))
          CHECK(prestack_check(id, e).holds);
  }
  SUBCASE("implicative flavor on small epis") {
    TriposInstance chain = chain3_tripos();
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (const FinMap& e : all_epis(FinSet(a), FinSet(b)))
          CHECK(prestack_check(chain, e).holds);
  }
  SUBCASE("non-epis are rejected") {
    CHECK_THROWS_AS(prestack_check(id, FinMap(FinSet(1), FinSet(2), {0})),
                    std::invalid_argument);
  }
}

TEST_CASE("caps turn oversized fibers into CapExceeded") {
  EnumCaps caps;
  caps.max_fiber = 8;
  TriposInstance id = make_identity_tripos(caps);
  CHECK_THROWS_AS(fiber_enumerate(id, FinSet(4)), CapExceeded);
  CHECK(fiber_enumerate(id, FinSet(3)).size() == 8);
}

TEST_CASE("flavor names") {
  CHECK(make_identity_tripos().flavor_name() == "identity");
  CHECK(make_power_tripos(2).flavor_name() == "power:2");
  CHECK(chain3_tripos().flavor_name() == "implicative(|A|=3)");
}
