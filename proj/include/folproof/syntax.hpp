// Copyright 2026 The folproof Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace folproof {

// Terms and formulas are locally nameless: bound occurrences are de Bruijn
// indices and binders only keep their variable name as a printing hint. Two
// values compare equal exactly when they are alpha-equivalent.

enum class TermKind : std::uint8_t { Variable, SchematicFunction, ConstantFunction };

struct TermSymbol {
  std::string name;
  std::size_t arity = 0;
  TermKind kind = TermKind::Variable;

  friend auto operator<=>(const TermSymbol&, const TermSymbol&) = default;
};

enum class FormulaKind : std::uint8_t { ConstantPredicate, SchematicPredicate, SchematicConnector };

struct FormulaSymbol {
  std::string name;
  std::size_t arity = 0;
  FormulaKind kind = FormulaKind::ConstantPredicate;

  friend auto operator<=>(const FormulaSymbol&, const FormulaSymbol&) = default;
};

TermSymbol variableSymbol(std::string name);
TermSymbol schematicFunction(std::string name, std::size_t arity);
TermSymbol constantFunction(std::string name, std::size_t arity);
FormulaSymbol constantPredicate(std::string name, std::size_t arity);
FormulaSymbol schematicPredicate(std::string name, std::size_t arity);
FormulaSymbol schematicConnector(std::string name, std::size_t arity);

const FormulaSymbol& equalitySymbol();
const FormulaSymbol& topSymbol();
const FormulaSymbol& bottomSymbol();

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct TermNode;
struct FormulaNode;
}  // namespace detail

class Term {
 public:
  static Term variable(std::string name);
  static Term apply(TermSymbol symbol, std::vector<Term> args);
  // De Bruijn index; only meaningful underneath a binder.
  static Term bound(std::uint32_t index);

  bool isBound() const;
  bool isVariable() const;
  std::uint32_t boundIndex() const;
  // Invalid for bound indices.
  const TermSymbol& symbol() const;
  std::span<const Term> args() const;

  std::size_t hash() const;
  // One past the largest loose de Bruijn index (0 when locally closed).
  std::uint32_t looseBound() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
  friend struct detail::TermNode;
};

enum class Connective : std::uint8_t { Not, And, Or, Implies, Iff, Schematic };
enum class Quantifier : std::uint8_t { Forall, Exists };

class Formula {
 public:
  enum class Tag : std::uint8_t { Predicate, Connector, Binder };

  static Formula predicate(FormulaSymbol symbol, std::vector<Term> args);
  static Formula top();
  static Formula bottom();
  static Formula equality(Term lhs, Term rhs);

  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula connector(Connective op, std::vector<Formula> operands);
  static Formula schematic(FormulaSymbol symbol, std::vector<Formula> operands);

  // Abstracts the free variable `var` of `body`.
  static Formula forall(const std::string& var, const Formula& body);
  static Formula exists(const std::string& var, const Formula& body);
  // Sugar for exists y. forall var. (body <=> var = y) with y fresh.
  static Formula existsOne(const std::string& var, const Formula& body);
  // Raw binder over a body whose loose index 0 refers to the new binder.
  static Formula binder(Quantifier q, std::string hint, Formula body);

  Tag tag() const;
  bool isPredicate() const { return tag() == Tag::Predicate; }
  bool isConnector() const { return tag() == Tag::Connector; }
  bool isBinder() const { return tag() == Tag::Binder; }
  bool isTop() const;
  bool isBottom() const;
  bool isEquality() const;
  bool is(Connective op) const;

  // Predicate applications and schematic connectors.
  const FormulaSymbol& symbol() const;
  std::span<const Term> terms() const;
  // Connector applications.
  Connective connective() const;
  std::span<const Formula> operands() const;
  // Binders.
  Quantifier quantifier() const;
  const std::string& boundName() const;
  const Formula& body() const;
  // Body with the bound variable replaced by `t`.
  Formula instantiate(const Term& t) const;

  std::size_t hash() const;
  std::uint32_t looseBound() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
  friend struct detail::FormulaNode;
};

struct LambdaTerm {
  std::vector<std::string> params;
  Term body;
};

// For schematic predicates the parameters are term variables; for schematic
// connectors they name arity-0 schematic predicates standing for formulas.
struct LambdaFormula {
  std::vector<std::string> params;
  Formula body;
};

using TermSchemaMap = std::map<TermSymbol, LambdaTerm>;
using FormulaSchemaMap = std::map<FormulaSymbol, LambdaFormula>;
using VariableMap = std::map<std::string, Term>;

std::set<std::string> freeVariables(const Term& t);
std::set<std::string> freeVariables(const Formula& f);
// All term-variable names occurring free, plus every name used by a symbol;
// used to pick printing names that cannot be confused with anything in scope.
void collectNames(const Formula& f, std::set<std::string>& out);

Term substituteVariables(const Term& t, const VariableMap& map);
Formula substituteVariables(const Formula& f, const VariableMap& map);
Term instantiateTermSchemas(const Term& t, const TermSchemaMap& map);
Formula instantiateTermSchemas(const Formula& f, const TermSchemaMap& map);
Formula instantiatePredicateSchemas(const Formula& f, const FormulaSchemaMap& map);
bool alphaEquivalent(const Formula& f, const Formula& g);

// Occurrence-based replacement used by substitution tactics and by the
// propositional solver: every subterm equal to `from` becomes `to`.
Formula replaceTerm(const Formula& f, const Term& from, const Term& to);
// Every subformula equal to `from` becomes `to`.
Formula replaceFormula(const Formula& f, const Formula& from, const Formula& to);
bool containsTerm(const Formula& f, const Term& t);
bool containsFormula(const Formula& f, const Formula& g);

// Smallest `base`, `base0`, `base1`, ... not in `taken` (trailing digits of
// `base` are stripped first when `base` itself is taken).
std::string freshName(const std::string& base, const std::set<std::string>& taken);

void collectSymbols(const Formula& f, std::set<TermSymbol>& terms, std::set<FormulaSymbol>& formulas);

}  // namespace folproof

template <>
struct std::hash<folproof::Term> {
  std::size_t operator()(const folproof::Term& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<folproof::Formula> {
  std::size_t operator()(const folproof::Formula& f) const noexcept { return f.hash(); }
};
