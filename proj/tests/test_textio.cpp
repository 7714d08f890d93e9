#include <doctest.h>

#include "tripos/textio.hpp"

using namespace tripos;

TEST_CASE("parse_algebra on a boolean 2 spec") {
  Expected<ImplicativeAlgebra> alg = parse_algebra(R"(
# the two-element boolean algebra
elements [bot top]
leq [(bot,top)]
separator [top]
)");
  REQUIRE(alg.ok());
  CHECK(alg->structure.size() == 2);
  CHECK(alg->structure.lattice.top == 1);
  CHECK(alg->separator.members == std::vector<bool>{false, true});
}

TEST_CASE("omitted imp block computes the Heyting implication") {
  Expected<ImplicativeAlgebra> alg = parse_algebra(R"(
elements [bot h top]
leq [(bot,h) (h,top)]
)");
  REQUIRE(alg.ok());
  // top -> h = h and h -> bot = bot in the 3-chain
  CHECK(alg->structure.arrow(2, 1) == 1);
  CHECK(alg->structure.arrow(1, 0) == 0);
  // absent separator block gives the least separator {top}
  CHECK(alg->separator.members == std::vector<bool>{false, false, true});
}

TEST_CASE("explicit imp tables are validated") {
  Expected<ImplicativeAlgebra> alg = parse_algebra(R"(
elements [bot top]
leq [(bot,top)]
imp [[top top] [top top]]
)");
  REQUIRE(alg.ok());  // constant-top table satisfies the meet axiom
  Expected<ImplicativeAlgebra> bad = parse_algebra(R"(
elements [bot top]
leq [(bot,top)]
imp [[bot bot] [bot bot]]
)");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().find("meet axiom") != std::string::npos);
}

TEST_CASE("parse errors carry locations") {
  Expected<ImplicativeAlgebra> missing = parse_algebra("elements [a b]\nleq [(a b]\n");
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.error().find("line 2") != std::string::npos);

  Expected<ImplicativeAlgebra> unknown = parse_algebra("elements [a]\nleq [(a,z)]\n");
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.error().find("unknown element 'z'") != std::string::npos);
  CHECK(unknown.error().find("line 2") != std::string::npos);

  CHECK_FALSE(parse_algebra("leq [(a,b)]").ok());
  CHECK_FALSE(parse_algebra("elements [a a]").ok());
  CHECK_FALSE(parse_algebra("").ok());
}

TEST_CASE("separators are closed from their generators") {
  Expected<ImplicativeAlgebra> alg = parse_algebra(R"(
elements [bot h top]
leq [(bot,h) (h,top)]
separator [h]
)");
  REQUIRE(alg.ok());
  // upward closure pulls in top
  CHECK(alg->separator.members == std::vector<bool>{false, true, true});
}

TEST_CASE("parse-serialize-parse is the identity on valid specs") {
  std::vector<std::string> specs = {
      "elements [bot top]\nleq [(bot,top)]\n",
      "elements [bot h top]\nleq [(bot,h) (h,top)]\nseparator [h]\n",
      "elements [o a b i]\nleq [(o,a) (o,b) (a,i) (b,i)]\n",
  };
  for (const std::string& text : specs) {
    Expected<ImplicativeAlgebra> first = parse_algebra(text);
    REQUIRE(first.ok());
    std::string canon = serialize_algebra(*first);
    Expected<ImplicativeAlgebra> second = parse_algebra(canon);
    REQUIRE(second.ok());
    CHECK(second->structure.lattice.leq == first->structure.lattice.leq);
    CHECK(second->structure.imp == first->structure.imp);
    CHECK(second->separator == first->separator);
    CHECK(serialize_algebra(*second) == canon);
  }
}

TEST_CASE("builtin algebras") {
  for (const std::string& name : builtin_algebra_names()) {
    Expected<ImplicativeAlgebra> alg = builtin_algebra(name);
    REQUIRE(alg.ok());
    CHECK(alg->separator.count() == 1);  // least separator {top}
  }
  CHECK_FALSE(builtin_algebra("nope").ok());
  CHECK(builtin_algebra("bool4")->structure.size() == 4);
}

TEST_CASE("parse_predicate_binding") {
  TriposInstance id = make_identity_tripos();
  Expected<PredicateBinding> b = parse_predicate_binding(id, "shape=2x2:mask=0110");
  REQUIRE(b.ok());
  CHECK(b->pred.index.size == 4);
  CHECK(b->shape.size() == 2);
  CHECK_FALSE(parse_predicate_binding(id, "shape=2:mask=011").ok());
  CHECK_FALSE(parse_predicate_binding(id, "mask=01").ok());

  Expected<ImplicativeAlgebra> alg = builtin_algebra("chain3");
  REQUIRE(alg.ok());
  TriposInstance chain = make_implicative_tripos(*alg);
  Expected<PredicateBinding> t = parse_predicate_binding(chain, "shape=2:table=0,2");
  REQUIRE(t.ok());
  CHECK(t->pred.table() == std::vector<int>{0, 2});
  CHECK_FALSE(parse_predicate_binding(chain, "shape=2:table=0,7").ok());
}

TEST_CASE("parse_formula surface syntax") {
  TriposInstance id = make_identity_tripos();
  PredicateEnv env;
  env["phi"] = PredicateBinding{Predicate{FinSet(2), Subobject(FinSet(2), {false, true})},
                                {FinSet(2)}};

  Expected<FormulaPtr> ok = parse_formula("(exists (i 2) (pred phi i))", env);
  REQUIRE(ok.ok());
  CHECK(formula_holds(id, *ok));

  CHECK(parse_formula("true", env).ok());
  CHECK(parse_formula("(and true false)", env).ok());
  CHECK_FALSE(parse_formula("(pred phi i)", env).ok());          // unbound variable
  CHECK_FALSE(parse_formula("(exists (i 3) (pred phi i))", env).ok());  // wrong sort
  CHECK_FALSE(parse_formula("(pred psi x)", env).ok());          // unknown predicate
  CHECK_FALSE(parse_formula("(and true)", env).ok());            // arity
  CHECK_FALSE(parse_formula("(forall (x two) true)", env).ok()); // bad sort literal
  CHECK_FALSE(parse_formula("true extra", env).ok());            // trailing tokens
}
