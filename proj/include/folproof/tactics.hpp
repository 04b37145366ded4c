#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folproof/proof.hpp"

namespace folproof {

enum class TacticError : std::uint8_t {
  NotTautology,
  ShapeMismatch,
  ArityMismatch,
  NoMatch,
  AmbiguousOrientation,
  NotEquivalent,
};

std::string_view tacticErrorName(TacticError e);

// A checked-by-construction proof, or the reason there is none. Facts a
// tactic was given become the imports of its proof, in order.
struct TacticResult {
  bool success = false;
  Proof proof;
  TacticError error = TacticError::NotTautology;
  std::string message;
  // Assignment the propositional solver could not close: atoms assumed true
  // on the left, atoms assumed false on the right.
  std::optional<Sequent> blocking;

  const Sequent& conclusion() const { return proof.steps.back().conclusion; }
};

struct SolverStats {
  int decisions = 0;  // internal nodes of the decision tree
  int leaves = 0;
};

TacticResult tautology(const Sequent& goal, SolverStats* stats = nullptr);
// Proves `goal` from the facts by adding their interpretations as
// assumptions; each fact is imported and cut away.
TacticResult tautologyFrom(const std::vector<Sequent>& facts, const Sequent& goal, SolverStats* stats = nullptr);

// Instantiates the leading universal quantifiers of a right formula of
// `fact` with `terms`, left to right. `target` picks the formula when the
// right side has several universals.
TacticResult instantiateForall(const Sequent& fact, const std::vector<Term>& terms,
                               const std::optional<Formula>& target = std::nullopt);

TacticResult instantiateFact(const Sequent& fact, const FormulaSchemaMap& formulas, const TermSchemaMap& terms,
                             const VariableMap& variables);

enum class Orientation : std::uint8_t { Auto, LeftToRight, RightToLeft };
enum class Side : std::uint8_t { Right, Left, Both };

// An equation s = t or an equivalence a <=> b. With `fact` (a sequent
// |- equation) it is imported, its free variables act as pattern variables,
// and it is cut away; otherwise it stays as an assumption of the result.
struct Equation {
  Formula formula;
  Orientation orientation = Orientation::Auto;
  std::optional<Sequent> fact;
};

TacticResult substitution(const Sequent& fact, const std::vector<Equation>& equations, Side side = Side::Right);

// One Restate (or Weakening) step from `fact`, or from nothing.
TacticResult restateAuto(const Sequent& goal, const std::optional<Sequent>& fact = std::nullopt);

}  // namespace folproof
