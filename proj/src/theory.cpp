#include "folproof/theory.hpp"

#include <array>
#include <atomic>

#include "folproof/fol2.hpp"
#include "folproof/text.hpp"

namespace folproof {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "UnknownSymbol", "DuplicateName", "ImportMismatch", "ConclusionMismatch",
    "InvalidProof", "UnknownJustification", "DuplicateSymbol", "FreeVariableLeak",
    "NotUniqueExistence", "WeakeningNotImplied", "NotFound",
};

std::atomic<std::uint64_t> nextId{1};

[[noreturn]] void fail(TheoryErrorCode code, const std::string& message) { throw TheoryError(code, message); }

Formula closeOver(const std::vector<std::string>& params, Formula f) {
  for (auto it = params.rbegin(); it != params.rend(); ++it) f = Formula::forall(*it, f);
  return f;
}

std::vector<Term> variables(const std::vector<std::string>& params) {
  std::vector<Term> out;
  for (const std::string& p : params) out.push_back(Term::variable(p));
  return out;
}

void onlyFree(const Formula& f, std::set<std::string> allowed, const std::string& what) {
  for (const std::string& v : freeVariables(f))
    if (!allowed.contains(v)) fail(TheoryErrorCode::FreeVariableLeak, what + " has free variable '" + v + "'");
}

}  // namespace

std::string_view theoryErrorName(TheoryErrorCode c) { return kNames[static_cast<std::size_t>(c)]; }

TheoryContext::TheoryContext(std::string name) : name_(std::move(name)), id_(nextId++) {}

void TheoryContext::declareFunction(const std::string& name, std::size_t arity) {
  freshSymbol(name);
  functions_[name] = arity;
}

void TheoryContext::declarePredicate(const std::string& name, std::size_t arity) {
  freshSymbol(name);
  predicates_[name] = arity;
}

bool TheoryContext::knowsFunction(const std::string& name, std::size_t arity) const {
  auto it = functions_.find(name);
  return it != functions_.end() && it->second == arity;
}

bool TheoryContext::knowsPredicate(const std::string& name, std::size_t arity) const {
  auto it = predicates_.find(name);
  return it != predicates_.end() && it->second == arity;
}

std::set<std::string> TheoryContext::constantNames() const {
  std::set<std::string> out;
  for (const auto& [name, arity] : functions_)
    if (arity == 0) out.insert(name);
  return out;
}

void TheoryContext::checkLanguage(const Formula& f) const {
  std::set<TermSymbol> terms;
  std::set<FormulaSymbol> formulas;
  collectSymbols(f, terms, formulas);
  for (const TermSymbol& s : terms)
    if (s.kind == TermKind::ConstantFunction && !knowsFunction(s.name, s.arity))
      fail(TheoryErrorCode::UnknownSymbol, "unknown function symbol " + s.name + "/" + std::to_string(s.arity));
  for (const FormulaSymbol& s : formulas)
    if (s.kind == FormulaKind::ConstantPredicate && s != equalitySymbol() && s != topSymbol() &&
        s != bottomSymbol() && !knowsPredicate(s.name, s.arity))
      fail(TheoryErrorCode::UnknownSymbol, "unknown predicate symbol " + s.name + "/" + std::to_string(s.arity));
}

void TheoryContext::freshName(const std::string& name) const {
  if (facts_.contains(name)) fail(TheoryErrorCode::DuplicateName, "'" + name + "' is already defined");
}

void TheoryContext::freshSymbol(const std::string& symbol) const {
  if (functions_.contains(symbol) || predicates_.contains(symbol))
    fail(TheoryErrorCode::DuplicateSymbol, "symbol '" + symbol + "' is already in the language");
}

void TheoryContext::owned(const Justification& j) const {
  if (j.owner() != id_)
    fail(TheoryErrorCode::UnknownJustification, "'" + j.name() + "' belongs to another theory");
}

Justification TheoryContext::record(Justification::Kind kind, const std::string& name, Sequent statement) {
  Justification j(kind, name, std::move(statement), id_);
  facts_.emplace(name, j);
  order_.push_back(name);
  return j;
}

Justification TheoryContext::addAxiom(const std::string& name, const Formula& f) {
  freshName(name);
  checkLanguage(f);
  return record(Justification::Kind::Axiom, name, Sequent({}, {f}));
}

Theorem TheoryContext::makeTheorem(const std::string& name, const Sequent& statement, const Proof& proof,
                                   const std::vector<Justification>& justifications) {
  freshName(name);
  for (const Justification& j : justifications) owned(j);
  for (const auto* side : {&statement.left(), &statement.right()})
    for (const Formula& f : *side) checkLanguage(f);
  CheckResult r = checkProof(proof);
  if (!r.valid)
    throw TheoryError(TheoryErrorCode::InvalidProof,
                      "proof of '" + name + "' fails at step " + std::to_string(r.failure->step) + ": " +
                          r.failure->message,
                      r.failure);
  Fol2 e;
  if (proof.imports.size() != justifications.size())
    throw TheoryError(TheoryErrorCode::ImportMismatch,
                      "proof has " + std::to_string(proof.imports.size()) + " imports but " +
                          std::to_string(justifications.size()) + " justifications",
                      std::nullopt, static_cast<int>(std::min(proof.imports.size(), justifications.size())));
  for (std::size_t i = 0; i < justifications.size(); ++i)
    if (!e.sequentSame(proof.imports[i], justifications[i].statement()))
      throw TheoryError(TheoryErrorCode::ImportMismatch,
                        "import " + std::to_string(-1 - static_cast<int>(i)) + " is not justified by '" +
                            justifications[i].name() + "'",
                        std::nullopt, static_cast<int>(i));
  if (!e.sequentSame(*r.conclusion, statement))
    fail(TheoryErrorCode::ConclusionMismatch,
         "proof concludes " + printSequent(*r.conclusion) + ", not " + printSequent(statement));
  return record(Justification::Kind::Theorem, name, statement);
}

Justification TheoryContext::definePredicate(const std::string& symbol, const std::vector<std::string>& params,
                                             const Formula& phi) {
  freshSymbol(symbol);
  freshName(symbol);
  checkLanguage(phi);
  onlyFree(phi, {params.begin(), params.end()}, "definition of " + symbol);
  Formula app = Formula::predicate(constantPredicate(symbol, params.size()), variables(params));
  Formula axiom = closeOver(params, Formula::equivalence(app, phi));
  predicates_[symbol] = params.size();
  definitions_.emplace(symbol, Definition{Definition::Kind::Predicate, symbol, params, phi, "", axiom});
  return record(Justification::Kind::Definition, symbol, Sequent({}, {axiom}));
}

Justification TheoryContext::defineFunction(const std::string& symbol, const std::vector<std::string>& params,
                                            const std::string& y, const Formula& phi,
                                            const Justification& uniqueness, const std::optional<Formula>& exposed) {
  freshSymbol(symbol);
  freshName(symbol);
  owned(uniqueness);
  checkLanguage(phi);
  std::set<std::string> allowed(params.begin(), params.end());
  allowed.insert(y);
  onlyFree(phi, allowed, "definition of " + symbol);

  Fol2 e;
  Formula unique = Formula::existsOne(y, phi);
  if (!e.sequentSame(uniqueness.statement(), Sequent({}, {unique})) &&
      !e.sequentSame(uniqueness.statement(), Sequent({}, {closeOver(params, unique)})))
    fail(TheoryErrorCode::NotUniqueExistence,
         "'" + uniqueness.name() + "' does not state |- " + printFormula(unique));

  Term value = Term::apply(constantFunction(symbol, params.size()), variables(params));
  Formula full = substituteVariables(phi, {{y, value}});
  Formula axiom = full;
  functions_[symbol] = params.size();
  if (exposed) {
    try {
      checkLanguage(*exposed);
      onlyFree(*exposed, allowed, "exposed property of " + symbol);
      axiom = substituteVariables(*exposed, {{y, value}});
      if (!e.leq(full, axiom))
        fail(TheoryErrorCode::WeakeningNotImplied, "the definition of " + symbol + " does not imply " +
                                                       printFormula(axiom) + " in the normal-form order");
    } catch (...) {
      functions_.erase(symbol);
      throw;
    }
  }
  definitions_.emplace(symbol, Definition{Definition::Kind::Function, symbol, params, phi, y, axiom});
  return record(Justification::Kind::Definition, symbol, Sequent({}, {axiom}));
}

Justification TheoryContext::getJustification(const std::string& nameOrSymbol) const {
  auto it = facts_.find(nameOrSymbol);
  if (it == facts_.end()) fail(TheoryErrorCode::NotFound, "nothing named '" + nameOrSymbol + "'");
  return it->second;
}

const Definition* TheoryContext::definition(const std::string& symbol) const {
  auto it = definitions_.find(symbol);
  return it == definitions_.end() ? nullptr : &it->second;
}

}  // namespace folproof
