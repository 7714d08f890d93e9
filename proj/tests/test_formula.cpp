#include <doctest.h>

#include "tripos/formula.hpp"
#include "tripos/textio.hpp"

using namespace tripos;

TEST_CASE("closed truth constants") {
  TriposInstance id = make_identity_tripos();
  CHECK(formula_holds(id, f_top()));
  CHECK_FALSE(formula_holds(id, f_bot()));

  Expected<ImplicativeAlgebra> alg = builtin_algebra("chain3");
  REQUIRE(alg.ok());
  TriposInstance chain = make_implicative_tripos(*alg);
  CHECK(formula_holds(chain, f_top()));
  CHECK_FALSE(formula_holds(chain, f_bot()));
}

TEST_CASE("forall i. phi(i) <-> phi(i) holds for every phi") {
  TriposInstance id = make_identity_tripos();
  FinSet I(3);
  for (const Predicate& phi : fiber_enumerate(id, I)) {
    FormulaPtr atom = f_atom(phi, {I}, {"i"});
    CHECK(formula_holds(id, f_forall("i", I, f_iff(atom, atom))));
  }
}

TEST_CASE("exists i. i in {1} holds in the identity flavor") {
  TriposInstance id = make_identity_tripos();
  FinSet I(2);
  Predicate phi{I, Subobject(I, {false, true})};
  CHECK(formula_holds(id, f_exists("i", I, f_atom(phi, {I}, {"i"}))));
  Predicate none{I, Subobject(I, {false, false})};
  CHECK_FALSE(formula_holds(id, f_exists("i", I, f_atom(none, {I}, {"i"}))));
  CHECK(formula_holds(id, f_forall("i", I, f_atom(top_pred(id, I), {I}, {"i"}))));
}

TEST_CASE("eval over an open context returns a predicate over the product") {
  TriposInstance id = make_identity_tripos();
  FinSet I(2), J(3);
  Predicate rho{product_object(I, J), Subobject(FinSet(6), {true, false, false, false, true, false})};
  Context ctx = {{"i", I}, {"j", J}};
  Predicate val = eval_formula(id, f_atom(rho, {I, J}, {"i", "j"}), ctx);
  CHECK(val.index.size == 6);
  CHECK(val == rho);
  // swapping the arguments transposes the payload
  Context ctx2 = {{"j", J}, {"i", I}};
  Predicate swapped = eval_formula(id, f_atom(rho, {I, J}, {"i", "j"}), ctx2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(swapped.sub().contains(j * 2 + i) == rho.sub().contains(i * 3 + j));
}

TEST_CASE("quantifier nesting and shadowing") {
  TriposInstance id = make_identity_tripos();
  FinSet I(2);
  Predicate diag{product_object(I, I),
                 Subobject(FinSet(4), {true, false, false, true})};
  // forall i. exists j. eq(i, j)
  CHECK(formula_holds(
      id, f_forall("i", I, f_exists("j", I, f_atom(diag, {I, I}, {"i", "j"})))));
  // forall i. forall j. eq(i, j) fails
  CHECK_FALSE(formula_holds(
      id, f_forall("i", I, f_forall("j", I, f_atom(diag, {I, I}, {"i", "j"})))));
  // the inner binder wins: forall i. exists i. eq(i, i) mentions only the inner i
  CHECK(formula_holds(
      id, f_forall("i", I, f_exists("i", I, f_atom(diag, {I, I}, {"i", "i"})))));
}

TEST_CASE("ill-sorted formulas are rejected") {
  TriposInstance id = make_identity_tripos();
  FinSet I(2), J(3);
  Predicate phi{I, Subobject(I, {false, true})};
  CHECK_THROWS_AS(eval_formula(id, f_atom(phi, {I}, {"x"}), {}), std::invalid_argument);
  CHECK_THROWS_AS(
      formula_holds(id, f_forall("x", J, f_atom(phi, {I}, {"x"}))),
      std::invalid_argument);
  CHECK_THROWS_AS(f_atom(phi, {J}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(f_atom(phi, {I}, {"x", "y"}), std::invalid_argument);
}

TEST_CASE("formula rendering round trip through the parser") {
  TriposInstance id = make_identity_tripos();
  FinSet I(2);
  Predicate phi{I, Subobject(I, {false, true})};
  PredicateEnv env;
  env["phi"] = PredicateBinding{phi, {I}};
  Expected<FormulaPtr> parsed =
      parse_formula("(forall (i 2) (imp (pred phi i) (pred phi i)))", env);
  REQUIRE(parsed.ok());
  CHECK(formula_holds(id, *parsed));
  CHECK(formula_str(*parsed) == "(forall (i 2) (imp (pred i) (pred i)))");
}
