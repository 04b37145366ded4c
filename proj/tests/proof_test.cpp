#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "folproof/fol2.hpp"
#include "folproof/proof.hpp"
#include "folproof/proof_io.hpp"
#include "folproof/text.hpp"
#include "generators.hpp"

using namespace folproof;

namespace {

Signature sig{{"a", "c"}};
Formula F(const char* s) { return parseFormula(s, sig); }
Term T(const char* s) { return parseTerm(s, sig); }
Sequent S(const char* s) { return parseSequent(s, sig); }

const char* kPierce = R"(folproof v1
0. Hypothesis() : 'phi |- 'phi
1. Weakening(0) : 'phi |- 'phi; 'psi
2. RightImplies(1) {phi='phi; psi='psi} : |- 'phi; 'phi => 'psi
3. LeftImplies(2, 0) {phi='phi => 'psi; psi='phi} : ('phi => 'psi) => 'phi |- 'phi
4. RightImplies(3) {phi=('phi => 'psi) => 'phi; psi='phi} : |- (('phi => 'psi) => 'phi) => 'phi
)";

Proof pierce() { return parseProofFile(kPierce); }

ProofStep step(Rule r, const char* conclusion, std::vector<int> premises = {}, StepParams p = {}) {
  ProofStep s;
  s.rule = r;
  s.conclusion = S(conclusion);
  s.premises = std::move(premises);
  s.params = std::move(p);
  return s;
}

ErrorCode failCode(const Proof& p) {
  CheckResult r = checkProof(p);
  EXPECT_FALSE(r.valid);
  return r.failure ? r.failure->code : ErrorCode::EmptyProof;
}

bool truth(const Formula& f, const std::map<std::string, bool>& env) {
  if (f.isTop()) return true;
  if (f.isBottom()) return false;
  if (f.isPredicate()) return env.at(printFormula(f));
  auto o = f.operands();
  switch (f.connective()) {
    case Connective::Not: return !truth(o[0], env);
    case Connective::And: return truth(o[0], env) && truth(o[1], env);
    case Connective::Or: return truth(o[0], env) || truth(o[1], env);
    case Connective::Implies: return !truth(o[0], env) || truth(o[1], env);
    case Connective::Iff: return truth(o[0], env) == truth(o[1], env);
    default: break;
  }
  return false;
}

const std::vector<std::string> kAtoms{"'p", "'q", "'r", "'s"};

bool booleanValid(const Sequent& s) {
  for (int row = 0; row < 16; ++row) {
    std::map<std::string, bool> env;
    for (int k = 0; k < 4; ++k) env[kAtoms[k]] = (row >> k) & 1;
    bool l = true, r = false;
    for (const Formula& f : s.left()) l = l && truth(f, env);
    for (const Formula& f : s.right()) r = r || truth(f, env);
    if (l && !r) return false;
  }
  return true;
}

Formula prop(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = pick(rng);
  if (depth == 0 || r < 3) return F(kAtoms[std::uniform_int_distribution<int>(0, 3)(rng)].c_str());
  if (r == 3) return Formula::negation(prop(rng, depth - 1));
  Formula a = prop(rng, depth - 1), b = prop(rng, depth - 1);
  switch (r % 4) {
    case 0: return Formula::conjunction(a, b);
    case 1: return Formula::disjunction(a, b);
    case 2: return Formula::implication(a, b);
    default: return Formula::equivalence(a, b);
  }
}

Sequent propSequent(std::mt19937& rng) {
  std::vector<Formula> l, r;
  int nl = std::uniform_int_distribution<int>(0, 2)(rng), nr = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < nl; ++i) l.push_back(prop(rng, 2));
  for (int i = 0; i < nr; ++i) r.push_back(prop(rng, 2));
  return Sequent(l, r);
}

template <typename T>
const T& any(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::vector<Formula> with(std::vector<Formula> v, const Formula& f) {
  v.push_back(f);
  return v;
}

bool sameFormulas(const Sequent& a, const Sequent& b) {
  Fol2 e;
  auto ids = [&](const std::vector<Formula>& side) {
    std::set<ol::NodeId> out;
    for (const Formula& f : side) out.insert(e.normalize(f));
    return out;
  };
  return ids(a.left()) == ids(b.left()) && ids(a.right()) == ids(b.right());
}

}  // namespace

TEST(CheckStep, HypothesisAndWeakening) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "'phi |- 'phi"));
  EXPECT_TRUE(checkProof(p).valid);
  p.steps.push_back(step(Rule::Weakening, "'phi |- 'phi; 'psi", {0}));
  EXPECT_TRUE(checkProof(p).valid);
}

TEST(CheckStep, HypothesisUpToNormalForm) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "'phi /\\ 'psi |- ~~('psi /\\ 'phi)"));
  EXPECT_TRUE(checkProof(p).valid);
  p.steps[0] = step(Rule::Hypothesis, "'phi |- 'psi");
  EXPECT_EQ(failCode(p), ErrorCode::RuleMismatch);
}

TEST(CheckStep, EigenvariableViolation) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "P(x) |- P(x)"));
  StepParams q;
  q.phi = F("P(x)");
  q.x = "x";
  p.steps.push_back(step(Rule::RightForall, "P(x) |- forall x. P(x)", {0}, q));
  CheckResult r = checkProof(p);
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.failure->code, ErrorCode::EigenvariableViolation);
  EXPECT_EQ(r.failure->step, 1);
}

TEST(CheckStep, QuantifierRules) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "P(y) |- P(y)"));
  StepParams all;
  all.phi = F("P(x)");
  all.x = "x";
  all.t = T("y");
  p.steps.push_back(step(Rule::LeftForall, "forall x. P(x) |- P(y)", {0}, all));
  StepParams gen;
  gen.phi = F("P(y)");
  gen.x = "y";
  p.steps.push_back(step(Rule::RightForall, "forall x. P(x) |- forall y. P(y)", {1}, gen));
  EXPECT_TRUE(checkProof(p).valid);

  Proof e;
  e.steps.push_back(step(Rule::Hypothesis, "P(c) |- P(c)"));
  StepParams ex = all;
  ex.t = T("c");
  e.steps.push_back(step(Rule::RightExists, "P(c) |- exists x. P(x)", {0}, ex));
  StepParams le;
  le.phi = F("P(c)");
  le.x = "z";
  e.steps.push_back(step(Rule::LeftExists, "exists z. P(c) |- exists x. P(x)", {1}, le));
  EXPECT_TRUE(checkProof(e).valid);

  ex.t = T("a");
  e.steps[1].params = ex;
  EXPECT_EQ(failCode(e), ErrorCode::RuleMismatch);
}

TEST(CheckStep, RightSubstEq) {
  Proof p;
  p.steps.push_back(step(Rule::RightRefl, "|- f(s) = f(s)"));
  StepParams q;
  q.context = F("f(s) = f('h)");
  q.hole = "h";
  q.s = T("s");
  q.t = T("t");
  p.steps.push_back(step(Rule::RightSubstEq, "s = t |- f(s) = f(t)", {0}, q));
  CheckResult r = checkProof(p);
  EXPECT_TRUE(r.valid) << (r.failure ? r.failure->message : "");

  p.steps[1].conclusion = S("s = t |- f(t) = f(t)");
  EXPECT_EQ(failCode(p), ErrorCode::RuleMismatch);
}

TEST(CheckStep, SubstIffToTop) {
  // From phi |- psi, replace phi by top inside psi: phi <-> top is just phi.
  Proof p;
  p.imports.push_back(S("'phi |- 'phi /\\ 'chi"));
  StepParams q;
  q.context = F("'h /\\ 'chi");
  q.hole = "h";
  q.a = F("'phi");
  q.b = F("top");
  p.steps.push_back(step(Rule::RightSubstIff, "'phi; 'phi <=> top |- top /\\ 'chi", {-1}, q));
  p.steps.push_back(step(Rule::Restate, "'phi |- 'chi", {0}));
  CheckResult r = checkProof(p);
  EXPECT_TRUE(r.valid) << (r.failure ? r.failure->message : "");
}

TEST(CheckStep, LeftIffFromOneImplication) {
  Proof p;
  p.imports.push_back(S("'phi => 'psi |- 'chi"));
  StepParams q;
  q.phi = F("'phi");
  q.psi = F("'psi");
  p.steps.push_back(step(Rule::LeftIff, "'phi <=> 'psi |- 'chi", {-1}, q));
  EXPECT_TRUE(checkProof(p).valid);
}

TEST(CheckStep, MissingParameterOrPremise) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "'phi |- 'phi"));
  p.steps.push_back(step(Rule::RightNot, "|- 'phi; ~'phi", {0}));
  EXPECT_EQ(failCode(p), ErrorCode::RuleMismatch);
  p.steps[1].params.phi = F("'phi");
  EXPECT_TRUE(checkProof(p).valid);
  p.steps[1].premises = {};
  EXPECT_EQ(failCode(p), ErrorCode::RuleMismatch);
}

TEST(CheckStep, InstSchemaArity) {
  Proof p;
  p.steps.push_back(step(Rule::Hypothesis, "'P(x) |- 'P(x)"));
  StepParams q;
  q.formulaMap.emplace(schematicPredicate("P", 1), LambdaFormula{{"v"}, F("Q(v, c)")});
  q.varMap.emplace("x", T("a"));
  p.steps.push_back(step(Rule::InstSchema, "Q(a, c) |- Q(a, c)", {0}, q));
  CheckResult r = checkProof(p);
  EXPECT_TRUE(r.valid) << (r.failure ? r.failure->message : "");
  p.steps[1].params.formulaMap.clear();
  p.steps[1].params.formulaMap.emplace(schematicPredicate("P", 1), LambdaFormula{{"v", "w"}, F("Q(v, w)")});
  EXPECT_EQ(failCode(p), ErrorCode::ArityMismatch);
}

TEST(CheckProof, Pierce) {
  Proof p = pierce();
  CheckResult r = checkProof(p);
  ASSERT_TRUE(r.valid) << r.failure->message;
  EXPECT_EQ(*r.conclusion, S("|- (('phi => 'psi) => 'phi) => 'phi"));
  EXPECT_EQ(conclusionOf(p), *r.conclusion);
}

TEST(CheckProof, PierceInOneRestate) {
  Proof p;
  p.steps.push_back(step(Rule::Restate, "|- (('phi => 'psi) => 'phi) => 'phi"));
  EXPECT_TRUE(checkProof(p).valid);
  p.steps[0] = step(Rule::Restate, "|- ('phi => 'psi) => 'phi");
  EXPECT_EQ(failCode(p), ErrorCode::RuleMismatch);
}

TEST(CheckProof, StepDeletedIsRuleMismatch) {
  Proof p = pierce();
  p.steps.erase(p.steps.begin() + 2);
  // Old step 3 is now step 2, still citing premises (2, 0) which shift onto
  // old steps 3 and 0; rewire it to old step 1 as an index shift would.
  p.steps[2].premises = {1, 0};
  p.steps[3].premises = {2};
  CheckResult r = checkProof(p);
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.failure->step, 2);
  EXPECT_EQ(r.failure->code, ErrorCode::RuleMismatch);
}

TEST(CheckProof, ImportThenWeakening) {
  Proof p;
  p.imports.push_back(S("|- 'A"));
  p.steps.push_back(step(Rule::Weakening, "|- 'A; 'B", {-1}));
  CheckResult r = checkProof(p);
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(*r.conclusion, S("|- 'A; 'B"));
}

TEST(CheckProof, ReferenceErrors) {
  Proof p;
  p.steps.push_back(step(Rule::Weakening, "|- 'A", {0}));
  EXPECT_EQ(failCode(p), ErrorCode::ForwardReference);
  p.steps[0].premises = {-1};
  EXPECT_EQ(failCode(p), ErrorCode::PremiseOutOfRange);
  EXPECT_EQ(failCode(Proof{}), ErrorCode::EmptyProof);
  EXPECT_THROW(conclusionOf(Proof{}), EmptyProofError);
}

TEST(CheckProof, SubproofTransparentAndNested) {
  Proof outer;
  outer.steps.push_back(step(Rule::Hypothesis, "'phi |- 'phi"));
  ProofStep sub = step(Rule::Subproof, "|- (('phi => 'psi) => 'phi) => 'phi");
  sub.params.inner = std::make_shared<Proof>(pierce());
  outer.steps.push_back(sub);
  CheckResult r = checkProof(outer);
  ASSERT_TRUE(r.valid) << r.failure->message;
  EXPECT_EQ(conclusionOf(outer), conclusionOf(pierce()));

  // Two levels: the inner proof weakens its import inside another subproof.
  Proof deepest;
  deepest.imports.push_back(S("'phi |- 'phi"));
  deepest.steps.push_back(step(Rule::Weakening, "'phi |- 'phi; 'psi", {-1}));
  Proof middle;
  middle.imports.push_back(S("|- 'phi => 'phi"));
  ProofStep inner = step(Rule::Subproof, "'phi |- 'phi; 'psi", {-1});
  inner.params.inner = std::make_shared<Proof>(deepest);
  middle.steps.push_back(inner);
  Proof top;
  top.steps.push_back(step(Rule::Hypothesis, "'phi |- 'phi"));
  ProofStep mid = step(Rule::Subproof, "|- ~'phi; 'phi; 'psi", {0});
  mid.params.inner = std::make_shared<Proof>(middle);
  top.steps.push_back(mid);
  r = checkProof(top);
  ASSERT_TRUE(r.valid) << r.failure->message;

  Proof flat = flattenSubproofs(top);
  for (const ProofStep& s : flat.steps) EXPECT_NE(s.rule, Rule::Subproof);
  CheckResult fr = checkProof(flat);
  ASSERT_TRUE(fr.valid) << fr.failure->message;
  EXPECT_EQ(*fr.conclusion, *r.conclusion);

  // A failure inside reports the path through the subproofs.
  Proof broken = deepest;
  broken.steps[0].conclusion = S("'phi |- 'psi");
  inner.params.inner = std::make_shared<Proof>(broken);
  middle.steps[0] = inner;
  mid.params.inner = std::make_shared<Proof>(middle);
  top.steps[1] = mid;
  r = checkProof(top);
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.failure->path, (std::vector<int>{1, 0, 0}));
  EXPECT_THROW(flattenSubproofs(top), InvalidProofError);
}

TEST(CheckProof, SubproofImportMismatch) {
  Proof outer;
  outer.steps.push_back(step(Rule::Hypothesis, "'phi |- 'phi"));
  Proof inner;
  inner.imports.push_back(S("|- 'psi"));
  inner.steps.push_back(step(Rule::Weakening, "|- 'psi; 'phi", {-1}));
  ProofStep sub = step(Rule::Subproof, "|- 'psi; 'phi", {0});
  sub.params.inner = std::make_shared<Proof>(inner);
  outer.steps.push_back(sub);
  EXPECT_EQ(failCode(outer), ErrorCode::SubproofImportMismatch);
}

TEST(Flatten, NoSubproofsIsIdentity) {
  Proof p = pierce();
  Proof f = flattenSubproofs(p);
  ASSERT_EQ(f.steps.size(), p.steps.size());
  EXPECT_EQ(printProof(f), printProof(p));
}

TEST(ProofFile, RoundTrip) {
  Proof p = pierce();
  std::string printed = printProof(p);
  EXPECT_EQ(printed, kPierce);
  EXPECT_EQ(printProof(parseProofFile(printed)), printed);
}

TEST(ProofFile, SubproofBlocksAndMaps) {
  const char* src = R"(folproof v1
const a
import -1 : |- 'P(x)
0. InstSchema(-1) {terms=[x -> a]; formulas=['P(v) -> Q(v) \/ R(v)]} : |- Q(a) \/ R(a)
1. Subproof(0) : |- R(a) \/ Q(a)
begin
  import -1 : |- Q(a) \/ R(a)
  0. Restate(-1) : |- R(a) \/ Q(a)
end
)";
  Proof p = parseProofFile(src);
  ASSERT_EQ(p.steps.size(), 2u);
  ASSERT_TRUE(p.steps[1].params.inner);
  CheckResult r = checkProof(p);
  EXPECT_TRUE(r.valid) << r.failure->message;
  EXPECT_EQ(printProof(p), src);
}

TEST(ProofFile, Errors) {
  EXPECT_THROW(parseProofFile("0. Hypothesis() : 'p |- 'p\n2. Weakening(0) : 'p |- 'p; 'q\n"), IndexGap);
  EXPECT_THROW(parseProofFile("import -2 : |- 'p\n0. Weakening(-2) : |- 'p\n"), IndexGap);
  try {
    parseProofFile("0. Hypothesis() : 'p |- 'p\n1. Frobnicate(0) : 'p |- 'p\n", "x.proof");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.span().file, "x.proof");
    EXPECT_EQ(e.span().line, 2);
    EXPECT_EQ(e.span().column, 4);
  }
  EXPECT_THROW(parseProofFile("0. Subproof() : |- top\nbegin\n0. Restate() : |- top\n"), SyntaxError);
}

TEST(CheckProperties, SoundOnPropositionalSteps) {
  // Random candidate steps; whatever the checker accepts must be Boolean
  // valid, since every accepted step only builds on accepted steps.
  std::mt19937 rng(71);
  int accepted = 0;
  for (int round = 0; round < 60; ++round) {
    Proof p;
    for (int i = 0; i < 25; ++i) {
      ProofStep s;
      int pick = std::uniform_int_distribution<int>(0, 8)(rng);
      auto premise = [&]() -> int {
        return std::uniform_int_distribution<int>(0, static_cast<int>(p.steps.size()) - 1)(rng);
      };
      if (p.steps.empty()) pick = 0;
      Formula phi = prop(rng, 2), psi = prop(rng, 2);
      s.params.phi = phi;
      s.params.psi = psi;
      switch (pick) {
        case 0: {
          Sequent base = propSequent(rng);
          s.rule = Rule::Hypothesis;
          s.conclusion = Sequent(with(base.left(), phi), with(base.right(), rng() % 4 ? phi : psi));
          break;
        }
        case 1: case 2: {
          s.rule = pick == 1 ? Rule::Restate : Rule::Weakening;
          int k = premise();
          s.premises = {k};
          const Sequent& q = p.steps[k].conclusion;
          std::vector<Formula> l = q.left(), r = q.right();
          if (rng() % 2) r.push_back(phi);
          if (rng() % 3 == 0 && !l.empty()) l.pop_back();
          if (rng() % 2) l = {Formula::conjunction(l.empty() ? Formula::top() : l.front(), psi)};
          s.conclusion = Sequent(l, r);
          break;
        }
        case 3: {
          s.rule = Rule::Cut;
          int k = premise(), m = premise();
          s.premises = {k, m};
          const Sequent &a = p.steps[k].conclusion, &b = p.steps[m].conclusion;
          if (!a.right().empty()) s.params.phi = any(rng, a.right());
          std::vector<Formula> l = a.left(), r = b.right();
          for (const Formula& f : b.left())
            if (f != *s.params.phi) l.push_back(f);
          for (const Formula& f : a.right())
            if (f != *s.params.phi) r.push_back(f);
          s.conclusion = Sequent(l, r);
          break;
        }
        case 4: case 5: {
          s.rule = pick == 4 ? Rule::RightImplies : Rule::RightNot;
          int k = premise();
          s.premises = {k};
          const Sequent& q = p.steps[k].conclusion;
          if (!q.left().empty()) s.params.phi = any(rng, q.left());
          if (!q.right().empty()) s.params.psi = any(rng, q.right());
          std::vector<Formula> l, r;
          for (const Formula& f : q.left())
            if (f != *s.params.phi) l.push_back(f);
          for (const Formula& f : q.right())
            if (pick == 5 || f != *s.params.psi) r.push_back(f);
          r.push_back(pick == 4 ? Formula::implication(*s.params.phi, *s.params.psi) : Formula::negation(*s.params.phi));
          s.conclusion = Sequent(l, r);
          break;
        }
        case 6: {
          s.rule = Rule::RightOr;
          int k = premise();
          s.premises = {k};
          const Sequent& q = p.steps[k].conclusion;
          if (!q.right().empty()) s.params.phi = any(rng, q.right());
          s.conclusion = Sequent(q.left(), with(q.right(), Formula::disjunction(*s.params.phi, psi)));
          break;
        }
        default: {
          s.rule = Rule::LeftAnd;
          int k = premise();
          s.premises = {k};
          const Sequent& q = p.steps[k].conclusion;
          if (!q.left().empty()) s.params.phi = any(rng, q.left());
          s.conclusion = Sequent(with(q.left(), Formula::conjunction(*s.params.phi, psi)), q.right());
          break;
        }
      }
      if (rng() % 5 == 0) s.conclusion = propSequent(rng);
      p.steps.push_back(s);
      if (!checkProof(p).valid) {
        p.steps.pop_back();
        continue;
      }
      ++accepted;
      ASSERT_TRUE(booleanValid(s.conclusion)) << ruleName(s.rule) << ": " << printSequent(s.conclusion);
    }
  }
  EXPECT_GT(accepted, 300);
}

TEST(CheckProperties, RestateReversibleAndWeakeningSubsumes) {
  std::mt19937 rng(73);
  gen::Pool pool{{"x", "y"}, {"c"}, 2};
  int restated = 0;
  for (int i = 0; i < 1500; ++i) {
    Sequent a = gen::sequent(rng, 3, pool);
    Sequent b = i % 2 ? gen::sequent(rng, 3, pool) : Sequent(a.right().empty() ? a.left() : a.left(), a.right());
    if (i % 4 == 0 && !a.right().empty()) {
      // Move a right formula to the left as a negation: always the same sequent.
      std::vector<Formula> r = a.right();
      Formula moved = r.back();
      r.pop_back();
      b = Sequent(with(a.left(), Formula::negation(moved)), r);
    }
    auto single = [](const Sequent& from, const Sequent& to, Rule rule) {
      Proof p;
      p.imports.push_back(from);
      ProofStep s;
      s.rule = rule;
      s.conclusion = to;
      s.premises = {-1};
      p.steps.push_back(s);
      return checkProof(p).valid;
    };
    if (!single(a, b, Rule::Restate)) continue;
    ++restated;
    ASSERT_TRUE(single(b, a, Rule::Restate)) << printSequent(a) << " / " << printSequent(b);
    ASSERT_TRUE(single(a, b, Rule::Weakening)) << printSequent(a) << " / " << printSequent(b);
  }
  EXPECT_GT(restated, 500);
}

TEST(CheckProperties, Deterministic) {
  Proof p = pierce();
  p.steps[3].params.psi = F("'psi");
  for (const Proof& q : {pierce(), p}) {
    CheckResult a = checkProof(q), b = checkProof(q);
    EXPECT_EQ(a.valid, b.valid);
    EXPECT_EQ(a.conclusion, b.conclusion);
    EXPECT_EQ(a.failure.has_value(), b.failure.has_value());
    if (a.failure) {
      EXPECT_EQ(a.failure->step, b.failure->step);
      EXPECT_EQ(a.failure->code, b.failure->code);
      EXPECT_EQ(a.failure->message, b.failure->message);
    }
  }
}

TEST(CheckProperties, SingleStepMutationsDetected) {
  // Swapping to Restate or Weakening is excluded: those absorb any step whose
  // conclusion already follows from its first premise.
  const Proof base = pierce();
  const std::vector<Rule> swaps{Rule::Hypothesis, Rule::Cut, Rule::LeftAnd, Rule::RightOr, Rule::LeftImplies,
                                Rule::RightImplies, Rule::LeftNot, Rule::RightNot};
  int mutants = 0;
  for (std::size_t i = 0; i < base.steps.size(); ++i) {
    for (Rule r : swaps) {
      if (r == base.steps[i].rule) continue;
      Proof m = base;
      m.steps[i].rule = r;
      ++mutants;
      EXPECT_FALSE(checkProof(m).valid) << "step " << i << " as " << ruleName(r);
    }
    for (std::size_t k = 0; k < base.steps[i].premises.size(); ++k) {
      Proof m = base;
      m.steps[i].premises.erase(m.steps[i].premises.begin() + static_cast<long>(k));
      ++mutants;
      EXPECT_FALSE(checkProof(m).valid) << "step " << i << " without premise " << k;
    }
    for (const char* atom : {"phi", "psi"}) {
      Proof m = base;
      Sequent& c = m.steps[i].conclusion;
      auto perturb = [&](const std::vector<Formula>& side) {
        std::vector<Formula> out;
        for (const Formula& f : side)
          out.push_back(instantiatePredicateSchemas(
              f, {{schematicPredicate(atom, 0), LambdaFormula{{}, F("'chi")}}}));
        return out;
      };
      Sequent changed(perturb(c.left()), perturb(c.right()));
      // ('phi => 'psi) => 'phi is 'phi by absorption, so some swaps change nothing.
      if (sameFormulas(changed, c)) continue;
      c = changed;
      ++mutants;
      EXPECT_FALSE(checkProof(m).valid) << "step " << i << " with " << atom << " replaced";
    }
  }
  EXPECT_GT(mutants, 40);
}
