#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folproof/sequent.hpp"
#include "folproof/syntax.hpp"

namespace folproof {

enum class Rule : std::uint8_t {
  Hypothesis, Cut,
  LeftAnd, RightAnd, LeftOr, RightOr, LeftImplies, RightImplies, LeftIff, RightIff, LeftNot, RightNot,
  LeftForall, RightForall, LeftExists, RightExists,
  InstSchema,
  LeftSubstEq, RightSubstEq, LeftSubstIff, RightSubstIff,
  LeftRefl, RightRefl,
  Restate, Weakening, Subproof,
};

std::string_view ruleName(Rule r);
std::optional<Rule> ruleFromName(std::string_view name);

struct Proof;

// Everything a step needs beyond its premises; which fields are read depends
// on the rule.
//
//   phi, psi    principal formula components (connective and cut rules);
//               for quantifier rules `phi` is the body with `x` free
//   x, t        bound variable and witness term (quantifier rules)
//   hole, context, s, t, a, b
//               substitution rules: `context` mentions the arity-0 schematic
//               symbol `hole`, plugged with s/t (terms) or a/b (formulas)
//   termMap, formulaMap, varMap
//               instantiation of schematic symbols and free variables
//   inner       the nested proof of a Subproof step
struct StepParams {
  std::optional<Formula> phi, psi;
  std::optional<std::string> x;
  std::optional<Term> s, t;
  std::optional<std::string> hole;
  std::optional<Formula> context, a, b;
  TermSchemaMap termMap;
  FormulaSchemaMap formulaMap;
  VariableMap varMap;
  std::shared_ptr<const Proof> inner;
};

struct ProofStep {
  Rule rule = Rule::Restate;
  Sequent conclusion;
  std::vector<int> premises;
  StepParams params;
  int line = 0;  // source line when parsed from text, 0 otherwise
};

// Premise index -1 - k refers to imports[k].
struct Proof {
  std::vector<ProofStep> steps;
  std::vector<Sequent> imports;
};

enum class ErrorCode : std::uint8_t {
  PremiseOutOfRange,
  ForwardReference,
  RuleMismatch,
  EigenvariableViolation,
  ArityMismatch,
  SubproofImportMismatch,
  EmptyProof,
};

std::string_view errorName(ErrorCode c);

struct CheckFailure {
  int step = 0;
  ErrorCode code = ErrorCode::RuleMismatch;
  std::string message;
  // Step indices through nested subproofs, outermost first; ends with `step`.
  std::vector<int> path;
};

struct CheckResult {
  bool valid = false;
  std::optional<Sequent> conclusion;
  std::optional<CheckFailure> failure;
};

class EmptyProofError : public std::invalid_argument {
 public:
  EmptyProofError() : std::invalid_argument("proof has no steps") {}
};

class InvalidProofError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CheckResult checkProof(const Proof& proof);
Sequent conclusionOf(const Proof& proof);
Proof flattenSubproofs(const Proof& proof);

// Sequent a step's premise index refers to, or nullptr when out of range.
const Sequent* premiseSequent(const Proof& proof, int index);

}  // namespace folproof
