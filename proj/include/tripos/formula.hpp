#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tripos/core.hpp"

namespace tripos {

/// A predicate applied to a tuple of variables. The shape lists the factor
/// sorts of the predicate's index (row-major product); args names one
/// context variable per factor.
struct Atom {
  Predicate pred;
  std::vector<FinSet> shape;
  std::vector<std::string> args;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Abstract syntax of the internal language: variables typed by finite
/// sorts, predicate atoms, propositional connectives, typed quantifiers.
struct Formula {
  enum class Kind { Top, Bot, Atomic, And, Or, Imp, Iff, Forall, Exists };

  Kind kind;
  std::optional<Atom> atom;      // Atomic
  FormulaPtr lhs, rhs;           // binary connectives
  std::string var;               // quantifiers
  FinSet sort;
  FormulaPtr body;
};

FormulaPtr f_top();
FormulaPtr f_bot();
FormulaPtr f_atom(Predicate pred, std::vector<FinSet> shape, std::vector<std::string> args);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string var, FinSet sort, FormulaPtr body);
FormulaPtr f_exists(std::string var, FinSet sort, FormulaPtr body);

struct ContextVar {
  std::string name;
  FinSet sort;
};
using Context = std::vector<ContextVar>;

/// Row-major product of the context sorts (the empty context gives 1).
FinSet context_product(const Context& ctx);

/// Structural recursion: atoms reindex along tupling maps, connectives use
/// the fiber operations, quantifiers go along context projections. Throws
/// std::invalid_argument on ill-sorted formulas.
Predicate eval_formula(const TriposInstance& T, const FormulaPtr& f, const Context& ctx);

/// A closed formula holds iff its value over the empty context is -||- top.
bool formula_holds(const TriposInstance& T, const FormulaPtr& f);

std::string formula_str(const FormulaPtr& f);

}  // namespace tripos
