#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "folproof/proof.hpp"

namespace folproof {

enum class TheoryErrorCode : std::uint8_t {
  UnknownSymbol,
  DuplicateName,
  ImportMismatch,
  ConclusionMismatch,
  InvalidProof,
  UnknownJustification,
  DuplicateSymbol,
  FreeVariableLeak,
  NotUniqueExistence,
  WeakeningNotImplied,
  NotFound,
};

std::string_view theoryErrorName(TheoryErrorCode c);

class TheoryError : public std::runtime_error {
 public:
  TheoryError(TheoryErrorCode code, const std::string& message,
              std::optional<CheckFailure> failure = std::nullopt, std::optional<int> import = std::nullopt)
      : std::runtime_error(message), code_(code), failure_(std::move(failure)), import_(import) {}

  TheoryErrorCode code() const { return code_; }
  // Set for InvalidProof.
  const std::optional<CheckFailure>& failure() const { return failure_; }
  // Import position (0-based) for ImportMismatch.
  std::optional<int> import() const { return import_; }

 private:
  TheoryErrorCode code_;
  std::optional<CheckFailure> failure_;
  std::optional<int> import_;
};

class TheoryContext;

// A fact a proof may import: an axiom, a theorem or a definitional axiom.
// Only a TheoryContext can create one, and it remembers which.
class Justification {
 public:
  enum class Kind : std::uint8_t { Axiom, Theorem, Definition };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Sequent& statement() const { return statement_; }
  std::uint64_t owner() const { return owner_; }

 private:
  Justification(Kind kind, std::string name, Sequent statement, std::uint64_t owner)
      : kind_(kind), name_(std::move(name)), statement_(std::move(statement)), owner_(owner) {}
  Kind kind_;
  std::string name_;
  Sequent statement_;
  std::uint64_t owner_;
  friend class TheoryContext;
};

using Theorem = Justification;

struct Definition {
  enum class Kind : std::uint8_t { Predicate, Function };
  Kind kind;
  std::string symbol;
  std::vector<std::string> params;
  // Over params, plus the result variable for functions.
  Formula definingFormula;
  std::string resultVariable;  // functions only
  // The axiom a proof can import; for functions possibly weaker than the
  // defining formula.
  Formula axiom;
};

class TheoryContext {
 public:
  explicit TheoryContext(std::string name = "theory");
  TheoryContext(const TheoryContext&) = delete;
  TheoryContext& operator=(const TheoryContext&) = delete;

  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }

  // Extends the language; names are shared between functions and predicates.
  void declareFunction(const std::string& name, std::size_t arity);
  void declarePredicate(const std::string& name, std::size_t arity);
  bool knowsFunction(const std::string& name, std::size_t arity) const;
  bool knowsPredicate(const std::string& name, std::size_t arity) const;
  // Nullary function symbols, which the text syntax needs declared.
  std::set<std::string> constantNames() const;

  Justification addAxiom(const std::string& name, const Formula& f);
  Theorem makeTheorem(const std::string& name, const Sequent& statement, const Proof& proof,
                      const std::vector<Justification>& justifications);
  Justification definePredicate(const std::string& symbol, const std::vector<std::string>& params,
                                const Formula& phi);
  // `uniqueness` must state |- exists! y. phi, optionally closed over params.
  Justification defineFunction(const std::string& symbol, const std::vector<std::string>& params,
                               const std::string& y, const Formula& phi, const Justification& uniqueness,
                               const std::optional<Formula>& exposed = std::nullopt);

  Justification getJustification(const std::string& nameOrSymbol) const;
  const Definition* definition(const std::string& symbol) const;
  // Names in the order they were added.
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::string name_;
  std::uint64_t id_;
  std::map<std::string, std::size_t> functions_, predicates_;
  std::map<std::string, Justification> facts_;
  std::map<std::string, Definition> definitions_;
  std::vector<std::string> order_;

  void checkLanguage(const Formula& f) const;
  void freshName(const std::string& name) const;
  void freshSymbol(const std::string& symbol) const;
  void owned(const Justification& j) const;
  Justification record(Justification::Kind kind, const std::string& name, Sequent statement);
};

}  // namespace folproof
