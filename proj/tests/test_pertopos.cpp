#include <doctest.h>

#include "tripos/pertopos.hpp"
#include "tripos/textio.hpp"

using namespace tripos;

namespace {

Predicate mask_pred(const FinSet& index, std::vector<bool> bits) {
  FinSet ambient(static_cast<int>(bits.size()));
  return Predicate{index, Subobject(ambient, std::move(bits))};
}

}  // namespace

TEST_CASE("validate_per") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("full equality on a point") {
    PerObject x{FinSet(1), mask_pred(FinSet(1), {true})};
    CHECK(validate_per(id, x).valid);
  }
  SUBCASE("diagonal on two points") {
    CHECK(validate_per(id, delta_obj(id, FinSet(2))).valid);
  }
  SUBCASE("asymmetric relations fail symmetry") {
    PerObject bad{FinSet(2), mask_pred(FinSet(4), {true, true, false, true})};
    InternalCheck r = validate_per(id, bad);
    CHECK_FALSE(r.valid);
    CHECK(r.failures[0] == "symmetry");
  }
  SUBCASE("symmetric but intransitive relations fail transitivity") {
    // 0~1 and 1~2 but not 0~2, with all loops present
    std::vector<bool> eq(9, false);
    auto set = [&](int a, int b) { eq[static_cast<size_t>(a * 3 + b)] = true; };
    set(0, 0); set(1, 1); set(2, 2); set(0, 1); set(1, 0); set(1, 2); set(2, 1);
    InternalCheck r = validate_per(id, PerObject{FinSet(3), mask_pred(FinSet(9), eq)});
    CHECK_FALSE(r.valid);
    CHECK(r.failures[0] == "transitivity");
  }
}

TEST_CASE("validate_funrel") {
  TriposInstance id = make_identity_tripos();
  PerObject d2 = delta_obj(id, FinSet(2));
  SUBCASE("the empty relation between nonempty PERs fails totality") {
    FunRel f{d2, d2, mask_pred(FinSet(4), {false, false, false, false})};
    InternalCheck r = validate_funrel(id, f);
    CHECK_FALSE(r.valid);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0] == "totality");
  }
  SUBCASE("the identity relation validates") {
    CHECK(validate_funrel(id, identity_funrel(d2)).valid);
  }
  SUBCASE("a non-single-valued relation is rejected") {
    FunRel f{d2, d2, mask_pred(FinSet(4), {true, true, false, true})};
    InternalCheck r = validate_funrel(id, f);
    CHECK_FALSE(r.valid);
    CHECK(std::find(r.failures.begin(), r.failures.end(), "single-valuedness") !=
          r.failures.end());
  }
}

TEST_CASE("identity and composition") {
  TriposInstance id = make_identity_tripos();
  PerObject one = delta_obj(id, FinSet(1));
  PerObject two = delta_obj(id, FinSet(2));

  SUBCASE("identity on Delta(1) is the unique total relation") {
    FunRel i1 = identity_funrel(one);
    CHECK(validate_funrel(id, i1).valid);
    CHECK(i1.rel.sub().members == std::vector<bool>{true});
  }
  SUBCASE("identity on Delta(2) is the diagonal") {
    CHECK(identity_funrel(two).rel.sub().members ==
          std::vector<bool>{true, false, false, true});
  }
  SUBCASE("identities are idempotent under composition") {
    FunRel i2 = identity_funrel(two);
    CHECK(funrel_equal(id, compose_funrel(id, i2, i2), i2));
  }
  SUBCASE("boundary mismatches are rejected") {
    CHECK_THROWS_AS(compose_funrel(id, identity_funrel(one), identity_funrel(two)),
                    std::invalid_argument);
  }
}

TEST_CASE("delta is a functor into the PER category") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("delta of the identity map") {
    FinSet three(3);
    CHECK(funrel_equal(id, delta_map(id, identity_map(three)),
                       identity_funrel(delta_obj(id, three))));
  }
  SUBCASE("delta of the empty object") {
    PerObject empty = delta_obj(id, FinSet(0));
    CHECK(validate_per(id, empty).valid);
    CHECK(empty.index.size == 0);
  }
  SUBCASE("delta preserves composition on all small maps") {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (const FinMap& u : all_maps(FinSet(a), FinSet(b)))
            for (const FinMap& v : all_maps(FinSet(b), FinSet(c)))
              CHECK(funrel_equal(id, delta_map(id, compose(u, v)),
                                 compose_funrel(id, delta_map(id, u), delta_map(id, v))));
  }
}

TEST_CASE("category law suite for the identity flavor") {
  LawSuiteResult r = run_per_category_suite(make_identity_tripos(), 2, 2);
  INFO(r.first_failure());
  CHECK(r.all_hold());
}

TEST_CASE("category law suite for an implicative flavor") {
  // cancellation needs separating objects in the universe, so the index cap
  // must admit Delta(2); cap 1 would make cancellation-epi vacuous
  Expected<ImplicativeAlgebra> alg = builtin_algebra("bool2");
  REQUIRE(alg.ok());
  LawSuiteResult r = run_per_category_suite(make_implicative_tripos(*alg), 2, 2);
  INFO(r.first_failure());
  CHECK(r.all_hold());
}

TEST_CASE("delta limits: terminal object and binary products") {
  TriposInstance id = make_identity_tripos();
  DeltaLimitsResult r = check_delta_limits(id, 2, FinSet(2), FinSet(2));
  INFO(r.detail);
  CHECK(r.verdict == Verdict::HoldsWithinBounds);
  CHECK(r.cones_checked > 0);
}

TEST_CASE("Delta(2) x Delta(2) is Delta(4) by an explicit two-sided iso") {
  TriposInstance id = make_identity_tripos();
  FinSet two(2);
  PerObject d4 = delta_obj(id, FinSet(4));
  PerObject prod = per_product(id, delta_obj(id, two), delta_obj(id, two));
  // indices agree (row-major pairing), equalities agree
  CHECK(prod.index.size == 4);
  CHECK(equiv(id, prod.eq, d4.eq));

  FunRel fwd = pair_funrel(id, delta_map(id, product_proj1(two, two)),
                           delta_map(id, product_proj2(two, two)));
  CHECK(validate_funrel(id, fwd).valid);
  FunRel back{prod, d4, prod.eq};
  CHECK(validate_funrel(id, back).valid);
  CHECK(funrel_equal(id, compose_funrel(id, fwd, back), identity_funrel(d4)));
  CHECK(funrel_equal(id, compose_funrel(id, back, fwd), identity_funrel(prod)));
}

TEST_CASE("subquotient witnesses") {
  TriposInstance id = make_identity_tripos();
  SUBCASE("constant objects are their own witness with an internal iso") {
    SubquotientWitness w = subquotient_witness(id, delta_obj(id, FinSet(2)));
    CHECK(w.verdict == Verdict::HoldsWithinBounds);
    CHECK(w.epi_internal);
    CHECK(funrel_internal_mono(id, w.epi));  // e is iso here
  }
  SUBCASE("the coarse one-class PER yields an epi that is not mono") {
    PerObject coarse{FinSet(2), mask_pred(FinSet(4), {true, true, true, true})};
    REQUIRE(validate_per(id, coarse).valid);
    SubquotientWitness w = subquotient_witness(id, coarse);
    CHECK(w.verdict == Verdict::HoldsWithinBounds);
    CHECK(w.epi_internal);
    CHECK_FALSE(funrel_internal_mono(id, w.epi));
  }
  SUBCASE("every enumerated PER gets a validated witness") {
    for (const PerObject& a : enumerate_pers(id, 2)) {
      SubquotientWitness w = subquotient_witness(id, a);
      CHECK(w.verdict == Verdict::HoldsWithinBounds);
    }
  }
  SUBCASE("implicative flavor PERs also get witnesses") {
    Expected<ImplicativeAlgebra> alg = builtin_algebra("chain3");
    REQUIRE(alg.ok());
    TriposInstance chain = make_implicative_tripos(*alg);
    for (const PerObject& a : enumerate_pers(chain, 1)) {
      SubquotientWitness w = subquotient_witness(chain, a);
      CHECK(w.verdict == Verdict::HoldsWithinBounds);
    }
  }
}
