#pragma once

#include <map>
#include <string>
#include <vector>

#include "tripos/common.hpp"
#include "tripos/formula.hpp"
#include "tripos/implicative.hpp"

namespace tripos {

/// Parses the textual algebra format:
///
///   elements [bot h top]
///   leq [(bot,h) (h,top)]
///   imp [[top top top] [bot top top] [bot h top]]   # optional
///   separator [top]                                  # generators, optional
///
/// Order pairs are generators: the reflexive-transitive closure is taken
/// before validation, so Hasse pairs suffice. When imp is omitted the
/// Heyting implication is computed from the order. The separator is the
/// least one containing the listed generators. '#' starts a comment.
/// Errors carry the offending line number.
Expected<ImplicativeAlgebra> parse_algebra(const std::string& text);

/// Canonical serialization; parse(serialize(parse(t))) == parse(t).
std::string serialize_algebra(const ImplicativeAlgebra& alg);

/// Named predicate bindings for the formula surface syntax.
struct PredicateBinding {
  Predicate pred;
  std::vector<FinSet> shape;
};
using PredicateEnv = std::map<std::string, PredicateBinding>;

/// Parses "shape=2x3:mask=011011" (power flavor, payload in enumeration
/// order over F(product)) or "shape=2:table=0,2" (implicative flavor).
Expected<PredicateBinding> parse_predicate_binding(const TriposInstance& T,
                                                   const std::string& spec);

/// S-expression formula syntax with typed binders:
///
///   formula := true | false
///            | (and f g) | (or f g) | (imp f g) | (iff f g)
///            | (forall (x N) f) | (exists (x N) f)
///            | (pred NAME x ...)
///
/// where N is the size of the bound sort and NAME refers to a binding.
Expected<FormulaPtr> parse_formula(const std::string& text, const PredicateEnv& env);

/// Shipped algebras: "bool2", "chain3", "chain4", "bool4", each with the
/// least separator {top}.
std::vector<std::string> builtin_algebra_names();
Expected<ImplicativeAlgebra> builtin_algebra(const std::string& name);

}  // namespace tripos
