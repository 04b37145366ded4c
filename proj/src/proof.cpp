#include "folproof/proof.hpp"

#include <array>
#include <set>

#include "folproof/fol2.hpp"
#include "folproof/text.hpp"

namespace folproof {

namespace {

constexpr std::array<std::string_view, 26> kRuleNames = {
    "Hypothesis", "Cut",
    "LeftAnd", "RightAnd", "LeftOr", "RightOr", "LeftImplies", "RightImplies", "LeftIff", "RightIff",
    "LeftNot", "RightNot",
    "LeftForall", "RightForall", "LeftExists", "RightExists",
    "InstSchema",
    "LeftSubstEq", "RightSubstEq", "LeftSubstIff", "RightSubstIff",
    "LeftRefl", "RightRefl",
    "Restate", "Weakening", "Subproof",
};

constexpr std::array<std::string_view, 7> kErrorNames = {
    "PremiseOutOfRange", "ForwardReference", "RuleMismatch", "EigenvariableViolation",
    "ArityMismatch", "SubproofImportMismatch", "EmptyProof",
};

struct StepError {
  ErrorCode code;
  std::string message;
  std::vector<int> innerPath;
};

[[noreturn]] void mismatch(std::string message) { throw StepError{ErrorCode::RuleMismatch, std::move(message), {}}; }

template <typename T>
const T& need(const std::optional<T>& v, const char* name) {
  if (!v) mismatch(std::string("missing parameter '") + name + "'");
  return *v;
}

std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Checker {
 public:
  CheckResult run(const Proof& proof) {
    CheckResult r;
    if (proof.steps.empty()) {
      r.failure = CheckFailure{0, ErrorCode::EmptyProof, "proof has no steps", {0}};
      return r;
    }
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
      try {
        step(proof, static_cast<int>(i));
      } catch (const StepError& e) {
        std::vector<int> path{static_cast<int>(i)};
        path.insert(path.end(), e.innerPath.begin(), e.innerPath.end());
        r.failure = CheckFailure{static_cast<int>(i), e.code, e.message, std::move(path)};
        return r;
      } catch (const ArityMismatch& e) {
        r.failure = CheckFailure{static_cast<int>(i), ErrorCode::ArityMismatch, e.what(), {static_cast<int>(i)}};
        return r;
      } catch (const std::invalid_argument& e) {
        r.failure = CheckFailure{static_cast<int>(i), ErrorCode::RuleMismatch, e.what(), {static_cast<int>(i)}};
        return r;
      }
    }
    r.valid = true;
    r.conclusion = proof.steps.back().conclusion;
    return r;
  }

 private:
  Fol2 e_;

  ol::NodeId id(const Formula& f) { return e_.normalize(f); }

  // Removes every formula equivalent to `f`; fails when there is none.
  std::vector<Formula> remove(const std::vector<Formula>& side, const Formula& f, const char* where) {
    ol::NodeId target = id(f);
    std::vector<Formula> out;
    for (const Formula& g : side)
      if (id(g) != target) out.push_back(g);
    if (out.size() == side.size()) mismatch("premise has no " + std::string(where) + " formula " + printFormula(f));
    return out;
  }

  // Same formulas on each side, compared one by one up to normal form;
  // `unit` (top on the left, bot on the right) counts as absent.
  bool sameSet(const std::vector<Formula>& a, const std::vector<Formula>& b, ol::NodeId unit) {
    std::set<ol::NodeId> x, y;
    for (const Formula& f : a) x.insert(id(f));
    for (const Formula& f : b) y.insert(id(f));
    x.erase(unit);
    y.erase(unit);
    return x == y;
  }

  void expectConclusion(const ProofStep& s, const Sequent& expected) {
    const ol::Store& st = e_.store();
    if (!sameSet(expected.left(), s.conclusion.left(), st.one()) ||
        !sameSet(expected.right(), s.conclusion.right(), st.zero()))
      mismatch("conclusion does not match the rule; expected " + printSequent(expected));
  }

  void eigen(const std::string& x, const std::vector<Formula>& left, const std::vector<Formula>& right) {
    for (const auto* side : {&left, &right})
      for (const Formula& f : *side)
        if (freeVariables(f).contains(x))
          throw StepError{ErrorCode::EigenvariableViolation,
                          "variable '" + x + "' is free in " + printFormula(f), {}};
  }

  static void arity(const ProofStep& s, std::size_t n) {
    if (s.premises.size() != n)
      mismatch(std::string(ruleName(s.rule)) + " takes " + std::to_string(n) + " premise(s), got " +
               std::to_string(s.premises.size()));
  }

  void step(const Proof& proof, int i) {
    const ProofStep& s = proof.steps[i];
    for (int p : s.premises) {
      if (p >= i)
        throw StepError{ErrorCode::ForwardReference,
                        "premise " + std::to_string(p) + " is not an earlier step", {}};
      if (p < -static_cast<int>(proof.imports.size()))
        throw StepError{ErrorCode::PremiseOutOfRange, "no import " + std::to_string(p), {}};
    }
    auto prem = [&](std::size_t k) -> const Sequent& { return *premiseSequent(proof, s.premises[k]); };
    const StepParams& q = s.params;

    switch (s.rule) {
      case Rule::Hypothesis: {
        arity(s, 0);
        for (const Formula& l : s.conclusion.left())
          for (const Formula& r : s.conclusion.right())
            if (id(l) == id(r)) return;
        mismatch("no formula occurs on both sides");
      }
      case Rule::Cut: {
        arity(s, 2);
        const Formula& phi = need(q.phi, "phi");
        auto d = remove(prem(0).right(), phi, "right");
        auto g = remove(prem(1).left(), phi, "left");
        expectConclusion(s, Sequent(concat(prem(0).left(), g), concat(d, prem(1).right())));
        return;
      }
      case Rule::LeftAnd: {
        arity(s, 1);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto g = remove(remove(prem(0).left(), phi, "left"), psi, "left");
        g.push_back(Formula::conjunction(phi, psi));
        expectConclusion(s, Sequent(g, prem(0).right()));
        return;
      }
      case Rule::RightAnd: {
        arity(s, 2);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto d = concat(remove(prem(0).right(), phi, "right"), remove(prem(1).right(), psi, "right"));
        d.push_back(Formula::conjunction(phi, psi));
        expectConclusion(s, Sequent(concat(prem(0).left(), prem(1).left()), d));
        return;
      }
      case Rule::LeftOr: {
        arity(s, 2);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto g = concat(remove(prem(0).left(), phi, "left"), remove(prem(1).left(), psi, "left"));
        g.push_back(Formula::disjunction(phi, psi));
        expectConclusion(s, Sequent(g, concat(prem(0).right(), prem(1).right())));
        return;
      }
      case Rule::RightOr: {
        arity(s, 1);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto d = remove(remove(prem(0).right(), phi, "right"), psi, "right");
        d.push_back(Formula::disjunction(phi, psi));
        expectConclusion(s, Sequent(prem(0).left(), d));
        return;
      }
      case Rule::LeftImplies: {
        arity(s, 2);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto d = remove(prem(0).right(), phi, "right");
        auto g = remove(prem(1).left(), psi, "left");
        auto left = concat(prem(0).left(), g);
        left.push_back(Formula::implication(phi, psi));
        expectConclusion(s, Sequent(left, concat(d, prem(1).right())));
        return;
      }
      case Rule::RightImplies: {
        arity(s, 1);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto g = remove(prem(0).left(), phi, "left");
        auto d = remove(prem(0).right(), psi, "right");
        d.push_back(Formula::implication(phi, psi));
        expectConclusion(s, Sequent(g, d));
        return;
      }
      case Rule::LeftIff: {
        arity(s, 1);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto g = remove(prem(0).left(), Formula::implication(phi, psi), "left");
        g.push_back(Formula::equivalence(phi, psi));
        expectConclusion(s, Sequent(g, prem(0).right()));
        return;
      }
      case Rule::RightIff: {
        arity(s, 2);
        const Formula &phi = need(q.phi, "phi"), &psi = need(q.psi, "psi");
        auto d = concat(remove(prem(0).right(), Formula::implication(phi, psi), "right"),
                        remove(prem(1).right(), Formula::implication(psi, phi), "right"));
        d.push_back(Formula::equivalence(phi, psi));
        expectConclusion(s, Sequent(concat(prem(0).left(), prem(1).left()), d));
        return;
      }
      case Rule::LeftNot: {
        arity(s, 1);
        const Formula& phi = need(q.phi, "phi");
        auto d = remove(prem(0).right(), phi, "right");
        auto g = prem(0).left();
        g.push_back(Formula::negation(phi));
        expectConclusion(s, Sequent(g, d));
        return;
      }
      case Rule::RightNot: {
        arity(s, 1);
        const Formula& phi = need(q.phi, "phi");
        auto g = remove(prem(0).left(), phi, "left");
        auto d = prem(0).right();
        d.push_back(Formula::negation(phi));
        expectConclusion(s, Sequent(g, d));
        return;
      }
      case Rule::LeftForall:
      case Rule::RightExists: {
        arity(s, 1);
        const Formula& phi = need(q.phi, "phi");
        const std::string& x = need(q.x, "x");
        const Term& t = need(q.t, "t");
        Formula instance = substituteVariables(phi, {{x, t}});
        if (s.rule == Rule::LeftForall) {
          auto g = remove(prem(0).left(), instance, "left");
          g.push_back(Formula::forall(x, phi));
          expectConclusion(s, Sequent(g, prem(0).right()));
        } else {
          auto d = remove(prem(0).right(), instance, "right");
          d.push_back(Formula::exists(x, phi));
          expectConclusion(s, Sequent(prem(0).left(), d));
        }
        return;
      }
      case Rule::RightForall: {
        arity(s, 1);
        const Formula& phi = need(q.phi, "phi");
        const std::string& x = need(q.x, "x");
        auto d = remove(prem(0).right(), phi, "right");
        eigen(x, prem(0).left(), d);
        d.push_back(Formula::forall(x, phi));
        expectConclusion(s, Sequent(prem(0).left(), d));
        return;
      }
      case Rule::LeftExists: {
        arity(s, 1);
        const Formula& phi = need(q.phi, "phi");
        const std::string& x = need(q.x, "x");
        auto g = remove(prem(0).left(), phi, "left");
        eigen(x, g, prem(0).right());
        g.push_back(Formula::exists(x, phi));
        expectConclusion(s, Sequent(g, prem(0).right()));
        return;
      }
      case Rule::InstSchema: {
        arity(s, 1);
        auto inst = [&](const std::vector<Formula>& side) {
          std::vector<Formula> out;
          for (const Formula& f : side) {
            Formula g = instantiatePredicateSchemas(f, q.formulaMap);
            g = instantiateTermSchemas(g, q.termMap);
            out.push_back(q.varMap.empty() ? g : substituteVariables(g, q.varMap));
          }
          return out;
        };
        expectConclusion(s, Sequent(inst(prem(0).left()), inst(prem(0).right())));
        return;
      }
      case Rule::LeftSubstEq:
      case Rule::RightSubstEq: {
        arity(s, 1);
        const Formula& ctx = need(q.context, "ctx");
        const Term &from = need(q.s, "s"), &to = need(q.t, "t");
        TermSymbol hole = schematicFunction(need(q.hole, "hole"), 0);
        Formula before = instantiateTermSchemas(ctx, {{hole, LambdaTerm{{}, from}}});
        Formula after = instantiateTermSchemas(ctx, {{hole, LambdaTerm{{}, to}}});
        substituted(s, prem(0), s.rule == Rule::LeftSubstEq, before, after, Formula::equality(from, to));
        return;
      }
      case Rule::LeftSubstIff:
      case Rule::RightSubstIff: {
        arity(s, 1);
        const Formula& ctx = need(q.context, "ctx");
        const Formula &from = need(q.a, "a"), &to = need(q.b, "b");
        FormulaSymbol hole = schematicPredicate(need(q.hole, "hole"), 0);
        Formula before = instantiatePredicateSchemas(ctx, {{hole, LambdaFormula{{}, from}}});
        Formula after = instantiatePredicateSchemas(ctx, {{hole, LambdaFormula{{}, to}}});
        substituted(s, prem(0), s.rule == Rule::LeftSubstIff, before, after, Formula::equivalence(from, to));
        return;
      }
      case Rule::LeftRefl: {
        arity(s, 1);
        const Term& t = need(q.t, "t");
        Formula refl = Formula::equality(t, t);
        if (!prem(0).leftContains(refl)) mismatch("premise has no left formula " + printFormula(refl));
        std::vector<Formula> g;
        for (const Formula& f : prem(0).left())
          if (f != refl) g.push_back(f);
        expectConclusion(s, Sequent(g, prem(0).right()));
        return;
      }
      case Rule::RightRefl: {
        arity(s, 0);
        for (const Formula& f : s.conclusion.right())
          if (f.isEquality() && f.terms()[0] == f.terms()[1]) return;
        mismatch("conclusion has no right formula of the form t = t");
      }
      case Rule::Restate: {
        if (s.premises.empty()) {
          if (!e_.isTautology(s.conclusion)) mismatch("conclusion is not equivalent to top");
          return;
        }
        arity(s, 1);
        if (!e_.sequentSame(prem(0), s.conclusion)) mismatch("premise and conclusion are not equivalent");
        return;
      }
      case Rule::Weakening: {
        arity(s, 1);
        if (!e_.sequentLeq(prem(0), s.conclusion)) mismatch("premise does not imply the conclusion");
        return;
      }
      case Rule::Subproof: {
        if (!q.inner) mismatch("subproof step without an inner proof");
        const Proof& inner = *q.inner;
        if (inner.imports.size() != s.premises.size())
          throw StepError{ErrorCode::SubproofImportMismatch,
                          "inner proof has " + std::to_string(inner.imports.size()) + " imports for " +
                              std::to_string(s.premises.size()) + " premises",
                          {}};
        for (std::size_t k = 0; k < inner.imports.size(); ++k)
          if (!e_.sequentSame(inner.imports[k], prem(k)))
            throw StepError{ErrorCode::SubproofImportMismatch,
                            "inner import " + std::to_string(-1 - static_cast<int>(k)) + " does not match premise " +
                                std::to_string(s.premises[k]),
                            {}};
        CheckResult r = run(inner);
        if (!r.valid) throw StepError{r.failure->code, r.failure->message, r.failure->path};
        if (!e_.sequentSame(*r.conclusion, s.conclusion))
          mismatch("subproof concludes " + printSequent(*r.conclusion));
        return;
      }
    }
    mismatch("unknown rule");
  }

  void substituted(const ProofStep& s, const Sequent& p, bool left, const Formula& before, const Formula& after,
                   const Formula& equation) {
    std::vector<Formula> g = p.left(), d = p.right();
    if (left) {
      g = remove(g, before, "left");
      g.push_back(after);
    } else {
      d = remove(d, before, "right");
      d.push_back(after);
    }
    g.push_back(equation);
    expectConclusion(s, Sequent(g, d));
  }
};

}  // namespace

std::string_view ruleName(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> ruleFromName(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  return std::nullopt;
}

std::string_view errorName(ErrorCode c) { return kErrorNames[static_cast<std::size_t>(c)]; }

const Sequent* premiseSequent(const Proof& proof, int index) {
  if (index >= 0) return index < static_cast<int>(proof.steps.size()) ? &proof.steps[index].conclusion : nullptr;
  std::size_t k = static_cast<std::size_t>(-1 - index);
  return k < proof.imports.size() ? &proof.imports[k] : nullptr;
}

CheckResult checkProof(const Proof& proof) { return Checker().run(proof); }

Sequent conclusionOf(const Proof& proof) {
  if (proof.steps.empty()) throw EmptyProofError();
  return proof.steps.back().conclusion;
}

namespace {

// Appends the steps of `proof` to `out`, with imports resolved to the given
// indices of `out`; returns the index of the last appended step.
int inlineInto(const Proof& proof, const std::vector<int>& importAt, std::vector<ProofStep>& out) {
  std::vector<int> at(proof.steps.size());
  auto resolve = [&](int p) { return p >= 0 ? at[p] : importAt[static_cast<std::size_t>(-1 - p)]; };
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    std::vector<int> prems;
    for (int p : s.premises) prems.push_back(resolve(p));
    if (s.rule != Rule::Subproof) {
      ProofStep copy = s;
      copy.premises = std::move(prems);
      out.push_back(std::move(copy));
      at[i] = static_cast<int>(out.size()) - 1;
      continue;
    }
    const Proof& inner = *s.params.inner;
    // Restate each premise into the exact shape the inner proof imports.
    std::vector<int> innerImports;
    for (std::size_t k = 0; k < inner.imports.size(); ++k) {
      ProofStep glue;
      glue.rule = Rule::Restate;
      glue.conclusion = inner.imports[k];
      glue.premises = {prems[k]};
      glue.line = s.line;
      out.push_back(std::move(glue));
      innerImports.push_back(static_cast<int>(out.size()) - 1);
    }
    int last = inlineInto(inner, innerImports, out);
    ProofStep close;
    close.rule = Rule::Restate;
    close.conclusion = s.conclusion;
    close.premises = {last};
    close.line = s.line;
    out.push_back(std::move(close));
    at[i] = static_cast<int>(out.size()) - 1;
  }
  return at.empty() ? -1 : at.back();
}

}  // namespace

Proof flattenSubproofs(const Proof& proof) {
  CheckResult r = checkProof(proof);
  if (!r.valid) throw InvalidProofError("cannot flatten an invalid proof: " + r.failure->message);
  Proof flat;
  flat.imports = proof.imports;
  std::vector<int> importAt;
  for (std::size_t k = 0; k < proof.imports.size(); ++k) importAt.push_back(-1 - static_cast<int>(k));
  inlineInto(proof, importAt, flat.steps);
  return flat;
}

}  // namespace folproof
