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

#include "folproof/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace folproof {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hashName(const std::string& s, std::size_t arity, std::uint8_t kind) {
  return mix(mix(std::hash<std::string>{}(s), arity), kind);
}

}  // namespace

TermSymbol variableSymbol(std::string name) { return {std::move(name), 0, TermKind::Variable}; }
TermSymbol schematicFunction(std::string name, std::size_t arity) {
  return {std::move(name), arity, TermKind::SchematicFunction};
}
TermSymbol constantFunction(std::string name, std::size_t arity) {
  return {std::move(name), arity, TermKind::ConstantFunction};
}
FormulaSymbol constantPredicate(std::string name, std::size_t arity) {
  return {std::move(name), arity, FormulaKind::ConstantPredicate};
}
FormulaSymbol schematicPredicate(std::string name, std::size_t arity) {
  return {std::move(name), arity, FormulaKind::SchematicPredicate};
}
FormulaSymbol schematicConnector(std::string name, std::size_t arity) {
  return {std::move(name), arity, FormulaKind::SchematicConnector};
}

const FormulaSymbol& equalitySymbol() {
  static const FormulaSymbol s{"=", 2, FormulaKind::ConstantPredicate};
  return s;
}
const FormulaSymbol& topSymbol() {
  static const FormulaSymbol s{"top", 0, FormulaKind::ConstantPredicate};
  return s;
}
const FormulaSymbol& bottomSymbol() {
  static const FormulaSymbol s{"bot", 0, FormulaKind::ConstantPredicate};
  return s;
}

namespace detail {

struct TermNode {
  bool bound = false;
  std::uint32_t index = 0;
  TermSymbol symbol;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::uint32_t loose = 0;

  static Term make(TermNode node) { return Term(std::make_shared<const TermNode>(std::move(node))); }
};

struct FormulaNode {
  Formula::Tag tag = Formula::Tag::Predicate;
  FormulaSymbol symbol;
  std::vector<Term> terms;
  Connective op = Connective::Not;
  std::vector<Formula> operands;  // binder body is operands[0]
  Quantifier quantifier = Quantifier::Forall;
  std::string hint;
  std::size_t hash = 0;
  std::uint32_t loose = 0;

  static Formula make(FormulaNode node) {
    return Formula(std::make_shared<const FormulaNode>(std::move(node)));
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) { return apply(variableSymbol(std::move(name)), {}); }

Term Term::apply(TermSymbol symbol, std::vector<Term> args) {
  if (symbol.name.empty()) throw std::invalid_argument("term symbol with empty name");
  if (symbol.kind == TermKind::Variable && symbol.arity != 0)
    throw ArityMismatch("variable '" + symbol.name + "' must have arity 0");
  if (args.size() != symbol.arity)
    throw ArityMismatch("symbol '" + symbol.name + "' expects " + std::to_string(symbol.arity) +
                        " arguments, got " + std::to_string(args.size()));
  detail::TermNode n;
  n.hash = hashName(symbol.name, symbol.arity, static_cast<std::uint8_t>(symbol.kind));
  for (const Term& a : args) {
    n.hash = mix(n.hash, a.hash());
    n.loose = std::max(n.loose, a.looseBound());
  }
  n.symbol = std::move(symbol);
  n.args = std::move(args);
  return detail::TermNode::make(std::move(n));
}

Term Term::bound(std::uint32_t index) {
  detail::TermNode n;
  n.bound = true;
  n.index = index;
  n.hash = mix(0x51ed270b27e1ULL, index);
  n.loose = index + 1;
  return detail::TermNode::make(std::move(n));
}

bool Term::isBound() const { return node_->bound; }
bool Term::isVariable() const { return !node_->bound && node_->symbol.kind == TermKind::Variable; }
std::uint32_t Term::boundIndex() const { return node_->index; }
const TermSymbol& Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::hash() const { return node_->hash; }
std::uint32_t Term::looseBound() const { return node_->loose; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.isBound() != b.isBound()) return a.isBound() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.isBound()) return a.boundIndex() <=> b.boundIndex();
  if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
  auto aa = a.args(), ba = b.args();
  for (std::size_t i = 0; i < aa.size(); ++i)
    if (auto c = aa[i] <=> ba[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::predicate(FormulaSymbol symbol, std::vector<Term> args) {
  if (symbol.name.empty()) throw std::invalid_argument("predicate symbol with empty name");
  if (symbol.kind == FormulaKind::SchematicConnector)
    throw std::invalid_argument("'" + symbol.name + "' is a connector, not a predicate");
  if (args.size() != symbol.arity)
    throw ArityMismatch("predicate '" + symbol.name + "' expects " + std::to_string(symbol.arity) +
                        " arguments, got " + std::to_string(args.size()));
  detail::FormulaNode n;
  n.tag = Tag::Predicate;
  n.hash = mix(0x1001, hashName(symbol.name, symbol.arity, static_cast<std::uint8_t>(symbol.kind)));
  for (const Term& a : args) {
    n.hash = mix(n.hash, a.hash());
    n.loose = std::max(n.loose, a.looseBound());
  }
  n.symbol = std::move(symbol);
  n.terms = std::move(args);
  return detail::FormulaNode::make(std::move(n));
}

Formula Formula::top() {
  static const Formula f = predicate(topSymbol(), {});
  return f;
}
Formula Formula::bottom() {
  static const Formula f = predicate(bottomSymbol(), {});
  return f;
}
Formula Formula::equality(Term lhs, Term rhs) { return predicate(equalitySymbol(), {std::move(lhs), std::move(rhs)}); }

Formula Formula::negation(Formula f) { return connector(Connective::Not, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) { return connector(Connective::And, {std::move(a), std::move(b)}); }
Formula Formula::disjunction(Formula a, Formula b) { return connector(Connective::Or, {std::move(a), std::move(b)}); }
Formula Formula::implication(Formula a, Formula b) {
  return connector(Connective::Implies, {std::move(a), std::move(b)});
}
Formula Formula::equivalence(Formula a, Formula b) { return connector(Connective::Iff, {std::move(a), std::move(b)}); }

Formula Formula::connector(Connective op, std::vector<Formula> operands) {
  if (op == Connective::Schematic) throw std::invalid_argument("use Formula::schematic for schematic connectors");
  std::size_t want = op == Connective::Not ? 1 : 2;
  if (operands.size() != want) throw ArityMismatch("connector arity mismatch");
  detail::FormulaNode n;
  n.tag = Tag::Connector;
  n.op = op;
  n.hash = mix(0x2002, static_cast<std::size_t>(op));
  for (const Formula& o : operands) {
    n.hash = mix(n.hash, o.hash());
    n.loose = std::max(n.loose, o.looseBound());
  }
  n.operands = std::move(operands);
  return detail::FormulaNode::make(std::move(n));
}

Formula Formula::schematic(FormulaSymbol symbol, std::vector<Formula> operands) {
  if (symbol.kind != FormulaKind::SchematicConnector)
    throw std::invalid_argument("'" + symbol.name + "' is not a schematic connector");
  if (operands.size() != symbol.arity)
    throw ArityMismatch("connector '" + symbol.name + "' expects " + std::to_string(symbol.arity) +
                        " arguments, got " + std::to_string(operands.size()));
  detail::FormulaNode n;
  n.tag = Tag::Connector;
  n.op = Connective::Schematic;
  n.hash = mix(0x3003, hashName(symbol.name, symbol.arity, static_cast<std::uint8_t>(symbol.kind)));
  for (const Formula& o : operands) {
    n.hash = mix(n.hash, o.hash());
    n.loose = std::max(n.loose, o.looseBound());
  }
  n.symbol = std::move(symbol);
  n.operands = std::move(operands);
  return detail::FormulaNode::make(std::move(n));
}

Formula Formula::binder(Quantifier q, std::string hint, Formula body) {
  detail::FormulaNode n;
  n.tag = Tag::Binder;
  n.quantifier = q;
  n.hint = hint.empty() ? std::string("x") : std::move(hint);
  n.hash = mix(mix(0x4004, static_cast<std::size_t>(q)), body.hash());
  n.loose = body.looseBound() > 0 ? body.looseBound() - 1 : 0;
  n.operands.push_back(std::move(body));
  return detail::FormulaNode::make(std::move(n));
}

Formula::Tag Formula::tag() const { return node_->tag; }
bool Formula::isTop() const { return isPredicate() && node_->symbol == topSymbol(); }
bool Formula::isBottom() const { return isPredicate() && node_->symbol == bottomSymbol(); }
bool Formula::isEquality() const { return isPredicate() && node_->symbol == equalitySymbol(); }
bool Formula::is(Connective op) const { return isConnector() && node_->op == op; }
const FormulaSymbol& Formula::symbol() const { return node_->symbol; }
std::span<const Term> Formula::terms() const { return node_->terms; }
Connective Formula::connective() const { return node_->op; }
std::span<const Formula> Formula::operands() const { return node_->operands; }
Quantifier Formula::quantifier() const { return node_->quantifier; }
const std::string& Formula::boundName() const { return node_->hint; }
const Formula& Formula::body() const { return node_->operands.front(); }
std::size_t Formula::hash() const { return node_->hash; }
std::uint32_t Formula::looseBound() const { return node_->loose; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.tag() <=> b.tag(); c != 0) return c;
  switch (a.tag()) {
    case Formula::Tag::Predicate: {
      if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
      auto at = a.terms(), bt = b.terms();
      for (std::size_t i = 0; i < at.size(); ++i)
        if (auto c = at[i] <=> bt[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case Formula::Tag::Connector: {
      if (auto c = a.connective() <=> b.connective(); c != 0) return c;
      if (a.connective() == Connective::Schematic)
        if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
      auto ao = a.operands(), bo = b.operands();
      for (std::size_t i = 0; i < ao.size(); ++i)
        if (auto c = ao[i] <=> bo[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case Formula::Tag::Binder:
      if (auto c = a.quantifier() <=> b.quantifier(); c != 0) return c;
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------
// Locally nameless plumbing

namespace {

Term shift(const Term& t, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || t.looseBound() <= cutoff) return t;
  if (t.isBound()) return Term::bound(t.boundIndex() + by);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(shift(a, by, cutoff));
  return Term::apply(t.symbol(), std::move(args));
}

Formula shift(const Formula& f, std::uint32_t by, std::uint32_t cutoff);

template <typename Fn>
Formula rebuild(const Formula& f, Fn&& onTermList, std::function<Formula(const Formula&, std::uint32_t)> onChild,
                std::uint32_t depth) {
  switch (f.tag()) {
    case Formula::Tag::Predicate: {
      std::vector<Term> args = onTermList(f.terms(), depth);
      bool same = true;
      for (std::size_t i = 0; i < args.size(); ++i) same = same && args[i] == f.terms()[i];
      if (same) return f;
      return Formula::predicate(f.symbol(), std::move(args));
    }
    case Formula::Tag::Connector: {
      std::vector<Formula> ops;
      bool same = true;
      for (const Formula& o : f.operands()) {
        ops.push_back(onChild(o, depth));
        same = same && ops.back() == o;
      }
      if (same) return f;
      if (f.connective() == Connective::Schematic) return Formula::schematic(f.symbol(), std::move(ops));
      return Formula::connector(f.connective(), std::move(ops));
    }
    case Formula::Tag::Binder: {
      Formula b = onChild(f.body(), depth + 1);
      if (b == f.body()) return f;
      return Formula::binder(f.quantifier(), f.boundName(), std::move(b));
    }
  }
  return f;
}

Formula shift(const Formula& f, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || f.looseBound() <= cutoff) return f;
  return rebuild(
      f,
      [by](std::span<const Term> ts, std::uint32_t d) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(shift(t, by, d));
        return out;
      },
      [by](const Formula& g, std::uint32_t d) { return shift(g, by, d); }, cutoff);
}

// Replaces free variables, shifting replacements by the binder depth.
Term substVars(const Term& t, const VariableMap& map, std::uint32_t depth) {
  if (t.isBound()) return t;
  if (t.isVariable()) {
    auto it = map.find(t.symbol().name);
    return it == map.end() ? t : shift(it->second, depth, 0);
  }
  std::vector<Term> args;
  bool same = true;
  for (const Term& a : t.args()) {
    args.push_back(substVars(a, map, depth));
    same = same && args.back() == a;
  }
  return same ? t : Term::apply(t.symbol(), std::move(args));
}

Formula substVars(const Formula& f, const VariableMap& map, std::uint32_t depth) {
  return rebuild(
      f,
      [&map](std::span<const Term> ts, std::uint32_t d) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(substVars(t, map, d));
        return out;
      },
      [&map](const Formula& g, std::uint32_t d) { return substVars(g, map, d); }, depth);
}

// Replaces bound index `depth` by `value` and closes the gap above it.
Term openTerm(const Term& t, const Term& value, std::uint32_t depth) {
  if (t.looseBound() <= depth) return t;
  if (t.isBound()) {
    if (t.boundIndex() == depth) return shift(value, depth, 0);
    return Term::bound(t.boundIndex() - 1);
  }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(openTerm(a, value, depth));
  return Term::apply(t.symbol(), std::move(args));
}

Formula openFormula(const Formula& f, const Term& value, std::uint32_t depth) {
  if (f.looseBound() <= depth) return f;
  return rebuild(
      f,
      [&value](std::span<const Term> ts, std::uint32_t d) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(openTerm(t, value, d));
        return out;
      },
      [&value](const Formula& g, std::uint32_t d) { return openFormula(g, value, d); }, depth);
}

Term abstractTerm(const Term& t, const std::string& var, std::uint32_t depth) {
  if (t.isBound()) return t;
  if (t.isVariable()) return t.symbol().name == var ? Term::bound(depth) : t;
  std::vector<Term> args;
  bool same = true;
  for (const Term& a : t.args()) {
    args.push_back(abstractTerm(a, var, depth));
    same = same && args.back() == a;
  }
  return same ? t : Term::apply(t.symbol(), std::move(args));
}

Formula abstractFormula(const Formula& f, const std::string& var, std::uint32_t depth) {
  return rebuild(
      f,
      [&var](std::span<const Term> ts, std::uint32_t d) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(abstractTerm(t, var, d));
        return out;
      },
      [&var](const Formula& g, std::uint32_t d) { return abstractFormula(g, var, d); }, depth);
}

VariableMap bindParams(const std::vector<std::string>& params, std::span<const Term> args) {
  VariableMap m;
  for (std::size_t i = 0; i < params.size(); ++i) m.insert_or_assign(params[i], args[i]);
  return m;
}

Term instTerm(const Term& t, const TermSchemaMap& map) {
  if (t.isBound()) return t;
  std::vector<Term> args;
  bool same = true;
  for (const Term& a : t.args()) {
    args.push_back(instTerm(a, map));
    same = same && args.back() == a;
  }
  auto it = map.find(t.symbol());
  if (it != map.end()) {
    // Lambda bodies of terms contain no binders, so arguments need no shift.
    return substVars(it->second.body, bindParams(it->second.params, args), 0);
  }
  return same ? t : Term::apply(t.symbol(), std::move(args));
}

Formula instTermFormula(const Formula& f, const TermSchemaMap& map) {
  return rebuild(
      f,
      [&map](std::span<const Term> ts, std::uint32_t) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(instTerm(t, map));
        return out;
      },
      [&map](const Formula& g, std::uint32_t) { return instTermFormula(g, map); }, 0);
}

// Replaces arity-0 schematic predicates named in `map` by formulas, shifted
// under the binders crossed on the way down.
Formula plugFormulas(const Formula& f, const std::map<std::string, Formula>& map, std::uint32_t depth) {
  if (f.isPredicate()) {
    if (f.symbol().kind == FormulaKind::SchematicPredicate && f.symbol().arity == 0) {
      auto it = map.find(f.symbol().name);
      if (it != map.end()) return shift(it->second, depth, 0);
    }
    return f;
  }
  return rebuild(
      f, [](std::span<const Term> ts, std::uint32_t) { return std::vector<Term>(ts.begin(), ts.end()); },
      [&map](const Formula& g, std::uint32_t d) { return plugFormulas(g, map, d); }, depth);
}

Formula instPred(const Formula& f, const FormulaSchemaMap& map) {
  if (f.isPredicate()) {
    auto it = map.find(f.symbol());
    if (it == map.end()) return f;
    return substVars(it->second.body, bindParams(it->second.params, f.terms()), 0);
  }
  if (f.is(Connective::Schematic)) {
    std::vector<Formula> ops;
    for (const Formula& o : f.operands()) ops.push_back(instPred(o, map));
    auto it = map.find(f.symbol());
    if (it == map.end()) return Formula::schematic(f.symbol(), std::move(ops));
    std::map<std::string, Formula> plug;
    for (std::size_t i = 0; i < ops.size(); ++i) plug.insert_or_assign(it->second.params[i], ops[i]);
    return plugFormulas(it->second.body, plug, 0);
  }
  return rebuild(
      f, [](std::span<const Term> ts, std::uint32_t) { return std::vector<Term>(ts.begin(), ts.end()); },
      [&map](const Formula& g, std::uint32_t) { return instPred(g, map); }, 0);
}

void freeVarsInto(const Term& t, std::set<std::string>& out) {
  if (t.isBound()) return;
  if (t.isVariable()) {
    out.insert(t.symbol().name);
    return;
  }
  for (const Term& a : t.args()) freeVarsInto(a, out);
}

void freeVarsInto(const Formula& f, std::set<std::string>& out) {
  if (f.isPredicate()) {
    for (const Term& t : f.terms()) freeVarsInto(t, out);
    return;
  }
  for (const Formula& o : f.operands()) freeVarsInto(o, out);
}

void namesInto(const Term& t, std::set<std::string>& out) {
  if (t.isBound()) return;
  if (t.isVariable() || (t.symbol().kind == TermKind::ConstantFunction && t.symbol().arity == 0))
    out.insert(t.symbol().name);
  for (const Term& a : t.args()) namesInto(a, out);
}

Term replaceTermIn(const Term& t, const Term& from, const Term& to) {
  if (t == from) return to;
  if (t.isBound() || t.args().empty()) return t;
  std::vector<Term> args;
  bool same = true;
  for (const Term& a : t.args()) {
    args.push_back(replaceTermIn(a, from, to));
    same = same && args.back() == a;
  }
  return same ? t : Term::apply(t.symbol(), std::move(args));
}

Formula replaceTermAt(const Formula& f, const Term& from, const Term& to, std::uint32_t depth) {
  Term sf = shift(from, depth, 0);
  Term st = shift(to, depth, 0);
  return rebuild(
      f,
      [&](std::span<const Term> ts, std::uint32_t) {
        std::vector<Term> out;
        for (const Term& t : ts) out.push_back(replaceTermIn(t, sf, st));
        return out;
      },
      [&](const Formula& g, std::uint32_t d) { return replaceTermAt(g, from, to, d); }, depth);
}

Formula replaceFormulaAt(const Formula& f, const Formula& from, const Formula& to, std::uint32_t depth) {
  if (f == shift(from, depth, 0)) return shift(to, depth, 0);
  if (f.isPredicate()) return f;
  return rebuild(
      f, [](std::span<const Term> ts, std::uint32_t) { return std::vector<Term>(ts.begin(), ts.end()); },
      [&](const Formula& g, std::uint32_t d) { return replaceFormulaAt(g, from, to, d); }, depth);
}

bool termContains(const Term& t, const Term& needle) {
  if (t == needle) return true;
  if (t.isBound()) return false;
  for (const Term& a : t.args())
    if (termContains(a, needle)) return true;
  return false;
}

bool formulaContainsTerm(const Formula& f, const Term& needle, std::uint32_t depth) {
  if (f.isPredicate()) {
    Term s = shift(needle, depth, 0);
    for (const Term& t : f.terms())
      if (termContains(t, s)) return true;
    return false;
  }
  std::uint32_t d = f.isBinder() ? depth + 1 : depth;
  for (const Formula& o : f.operands())
    if (formulaContainsTerm(o, needle, d)) return true;
  return false;
}

bool formulaContains(const Formula& f, const Formula& needle, std::uint32_t depth) {
  if (f == shift(needle, depth, 0)) return true;
  if (f.isPredicate()) return false;
  std::uint32_t d = f.isBinder() ? depth + 1 : depth;
  for (const Formula& o : f.operands())
    if (formulaContains(o, needle, d)) return true;
  return false;
}

void checkLambdaArity(std::size_t arity, std::size_t params, const std::string& name) {
  if (arity != params)
    throw ArityMismatch("instantiation of '" + name + "' expects " + std::to_string(arity) +
                        " parameters, lambda has " + std::to_string(params));
}

}  // namespace

Formula Formula::forall(const std::string& var, const Formula& body) {
  return binder(Quantifier::Forall, var, abstractFormula(shift(body, 1, 0), var, 0));
}

Formula Formula::exists(const std::string& var, const Formula& body) {
  return binder(Quantifier::Exists, var, abstractFormula(shift(body, 1, 0), var, 0));
}

Formula Formula::existsOne(const std::string& var, const Formula& body) {
  std::set<std::string> taken = freeVariables(body);
  taken.insert(var);
  std::string y = freshName("y", taken);
  Formula inner = forall(var, equivalence(body, equality(Term::variable(var), Term::variable(y))));
  return exists(y, inner);
}

Formula Formula::instantiate(const Term& t) const { return openFormula(body(), t, 0); }

std::set<std::string> freeVariables(const Term& t) {
  std::set<std::string> out;
  freeVarsInto(t, out);
  return out;
}

std::set<std::string> freeVariables(const Formula& f) {
  std::set<std::string> out;
  freeVarsInto(f, out);
  return out;
}

void collectNames(const Formula& f, std::set<std::string>& out) {
  if (f.isPredicate()) {
    for (const Term& t : f.terms()) namesInto(t, out);
    return;
  }
  for (const Formula& o : f.operands()) collectNames(o, out);
}

Term substituteVariables(const Term& t, const VariableMap& map) { return substVars(t, map, 0); }
Formula substituteVariables(const Formula& f, const VariableMap& map) { return substVars(f, map, 0); }

Term instantiateTermSchemas(const Term& t, const TermSchemaMap& map) {
  for (const auto& [sym, lam] : map) checkLambdaArity(sym.arity, lam.params.size(), sym.name);
  return instTerm(t, map);
}

Formula instantiateTermSchemas(const Formula& f, const TermSchemaMap& map) {
  if (map.empty()) return f;
  for (const auto& [sym, lam] : map) checkLambdaArity(sym.arity, lam.params.size(), sym.name);
  return instTermFormula(f, map);
}

Formula instantiatePredicateSchemas(const Formula& f, const FormulaSchemaMap& map) {
  if (map.empty()) return f;
  for (const auto& [sym, lam] : map) checkLambdaArity(sym.arity, lam.params.size(), sym.name);
  return instPred(f, map);
}

bool alphaEquivalent(const Formula& f, const Formula& g) { return f == g; }

Formula replaceTerm(const Formula& f, const Term& from, const Term& to) {
  if (from == to) return f;
  return replaceTermAt(f, from, to, 0);
}

Formula replaceFormula(const Formula& f, const Formula& from, const Formula& to) {
  if (from == to) return f;
  return replaceFormulaAt(f, from, to, 0);
}

bool containsTerm(const Formula& f, const Term& t) { return formulaContainsTerm(f, t, 0); }
bool containsFormula(const Formula& f, const Formula& g) { return formulaContains(f, g, 0); }

std::string freshName(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.contains(base)) return base;
  std::string stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  for (std::size_t i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken.contains(candidate)) return candidate;
  }
}

namespace {

void symbolsInto(const Term& t, std::set<TermSymbol>& terms) {
  if (t.isBound() || t.isVariable()) return;
  terms.insert(t.symbol());
  for (const Term& a : t.args()) symbolsInto(a, terms);
}

}  // namespace

void collectSymbols(const Formula& f, std::set<TermSymbol>& terms, std::set<FormulaSymbol>& formulas) {
  if (f.isPredicate()) {
    formulas.insert(f.symbol());
    for (const Term& t : f.terms()) symbolsInto(t, terms);
    return;
  }
  if (f.is(Connective::Schematic)) formulas.insert(f.symbol());
  for (const Formula& o : f.operands()) collectSymbols(o, terms, formulas);
}

}  // namespace folproof
