#include "folproof/tactics.hpp"

#include <array>
#include <functional>
#include <map>

#include "folproof/fol2.hpp"
#include "folproof/text.hpp"

namespace folproof {

namespace {

constexpr std::array<std::string_view, 6> kNames = {
    "NotTautology", "ShapeMismatch", "ArityMismatch", "NoMatch", "AmbiguousOrientation", "NotEquivalent",
};

TacticResult failure(TacticError e, std::string message, std::optional<Sequent> blocking = std::nullopt) {
  TacticResult r;
  r.error = e;
  r.message = std::move(message);
  r.blocking = std::move(blocking);
  return r;
}

TacticResult success(Proof proof) {
  TacticResult r;
  r.success = true;
  r.proof = std::move(proof);
  return r;
}

int add(Proof& p, Rule rule, Sequent conclusion, std::vector<int> premises = {}, StepParams params = {}) {
  ProofStep s;
  s.rule = rule;
  s.conclusion = std::move(conclusion);
  s.premises = std::move(premises);
  s.params = std::move(params);
  p.steps.push_back(std::move(s));
  return static_cast<int>(p.steps.size()) - 1;
}

std::vector<Formula> with(std::vector<Formula> v, const Formula& f) {
  v.push_back(f);
  return v;
}

// Side with every formula equivalent to `f` taken out, as the checker does.
std::vector<Formula> without(Fol2& e, const std::vector<Formula>& side, const Formula& f) {
  ol::NodeId target = e.normalize(f);
  std::vector<Formula> out;
  for (const Formula& g : side)
    if (e.normalize(g) != target) out.push_back(g);
  return out;
}

std::string holeFor(const Formula& f) {
  std::set<std::string> names;
  collectNames(f, names);
  return freshName("h", names);
}

// Decision procedure: every call proves `decisions |- g`.
class Solver {
 public:
  Solver(Proof& proof, SolverStats& stats) : proof_(proof), stats_(stats) {}

  std::optional<Sequent> blocking;

  // Returns the step proving the node, or nullopt once a branch fails.
  // `conclusion`, when given, replaces `decisions |- g` as the sequent the
  // node concludes; it must have the same formulas up to normal form.
  std::optional<int> solve(const Formula& g, std::vector<Formula>& decisions, std::vector<Formula>& positive,
                           std::vector<Formula>& negative, const std::optional<Sequent>& conclusion = std::nullopt) {
    ol::NodeId n = e_.normalize(g);
    if (n == e_.store().one()) {
      ++stats_.leaves;
      return add(proof_, Rule::Restate, conclusion ? *conclusion : Sequent(decisions, {g}));
    }
    if (n == e_.store().zero()) {
      blocking = Sequent(positive, negative);
      return std::nullopt;
    }
    ++stats_.decisions;
    Formula red = e_.toFormula(n);
    Formula atom = bestAtom(red);
    std::string hole = holeFor(red);
    Formula holeF = Formula::predicate(schematicPredicate(hole, 0), {});
    Formula context = replaceFormula(red, atom, holeF);

    decisions.push_back(atom);
    positive.push_back(atom);
    auto yes = solve(replaceFormula(red, atom, Formula::top()), decisions, positive, negative);
    positive.pop_back();
    decisions.pop_back();
    if (!yes) return std::nullopt;
    StepParams p;
    p.context = context;
    p.hole = hole;
    p.a = Formula::top();
    p.b = atom;
    // top <=> atom is the atom itself, already among the assumptions.
    int pos = add(proof_, Rule::RightSubstIff, Sequent(proof_.steps[*yes].conclusion.left(), {red}), {*yes}, p);

    Formula notAtom = Formula::negation(atom);
    decisions.push_back(notAtom);
    negative.push_back(atom);
    auto no = solve(replaceFormula(red, atom, Formula::bottom()), decisions, positive, negative);
    negative.pop_back();
    decisions.pop_back();
    if (!no) return std::nullopt;
    p.a = Formula::bottom();
    // bot <=> atom is the negated atom.
    int neg = add(proof_, Rule::RightSubstIff, Sequent(proof_.steps[*no].conclusion.left(), {red}), {*no}, p);

    StepParams join;
    join.phi = atom;
    join.psi = notAtom;
    // atom \/ ~atom is top, which the checker drops from the left.
    return add(proof_, Rule::LeftOr, conclusion ? *conclusion : Sequent(decisions, {red}), {pos, neg}, join);
  }

  Fol2& engine() { return e_; }

 private:
  Proof& proof_;
  SolverStats& stats_;
  Fol2 e_;

  static void countAtoms(const Formula& f, std::map<Formula, int>& counts) {
    if (f.isTop() || f.isBottom()) return;
    if (f.isConnector() && f.connective() != Connective::Schematic) {
      for (const Formula& o : f.operands()) countAtoms(o, counts);
      return;
    }
    ++counts[f];
  }

  // Most frequent atom; ties go to the smallest in the structural order.
  static Formula bestAtom(const Formula& f) {
    std::map<Formula, int> counts;
    countAtoms(f, counts);
    const Formula* best = nullptr;
    int most = 0;
    for (const auto& [atom, c] : counts)
      if (c > most) {
        best = &atom;
        most = c;
      }
    return *best;
  }
};

}  // namespace

std::string_view tacticErrorName(TacticError e) { return kNames[static_cast<std::size_t>(e)]; }

TacticResult tautology(const Sequent& goal, SolverStats* stats) {
  SolverStats local;
  SolverStats& s = stats ? *stats : local;
  Proof proof;
  Solver solver(proof, s);
  std::vector<Formula> decisions, positive, negative;
  Formula f = interpretation(goal);
  if (solver.engine().isTautology(goal)) {
    ++s.leaves;
    add(proof, Rule::Restate, goal);
    return success(std::move(proof));
  }
  // A goal |- f is concluded by the root itself; others need a closing Restate.
  bool direct = goal.left().empty() && goal.right().size() == 1;
  auto root = solver.solve(f, decisions, positive, negative, direct ? std::optional<Sequent>(goal) : std::nullopt);
  if (!root)
    return failure(TacticError::NotTautology, "The statement is not provable within propositional logic.",
                   solver.blocking);
  if (!direct) add(proof, Rule::Restate, goal, {*root});
  return success(std::move(proof));
}

TacticResult tautologyFrom(const std::vector<Sequent>& facts, const Sequent& goal, SolverStats* stats) {
  std::vector<Formula> assumptions;
  for (const Sequent& f : facts) assumptions.push_back(interpretation(f));
  std::vector<Formula> left = goal.left();
  left.insert(left.end(), assumptions.begin(), assumptions.end());
  Sequent extended(left, goal.right());
  TacticResult r = tautology(extended, stats);
  if (!r.success) return r;

  Proof& proof = r.proof;
  proof.imports = facts;
  Fol2 e;
  int last = static_cast<int>(proof.steps.size()) - 1;
  Sequent cur = extended;
  for (std::size_t k = 0; k < facts.size(); ++k) {
    const Formula& a = assumptions[k];
    int as = add(proof, Rule::Restate, Sequent({}, {a}), {-1 - static_cast<int>(k)});
    StepParams p;
    p.phi = a;
    cur = Sequent(without(e, cur.left(), a), cur.right());
    last = add(proof, Rule::Cut, cur, {as, last}, p);
  }
  if (cur != goal) add(proof, Rule::Weakening, goal, {last});
  return r;
}

TacticResult instantiateForall(const Sequent& fact, const std::vector<Term>& terms,
                               const std::optional<Formula>& target) {
  std::optional<Formula> quantified = target;
  if (!quantified) {
    for (const Formula& f : fact.right())
      if (f.isBinder() && f.quantifier() == Quantifier::Forall) {
        if (quantified) return failure(TacticError::ShapeMismatch, "several universal formulas on the right");
        quantified = f;
      }
    if (!quantified) return failure(TacticError::ShapeMismatch, "no universal formula on the right");
  } else if (!fact.rightContains(*target)) {
    return failure(TacticError::ShapeMismatch, printFormula(*target) + " is not on the right");
  }

  std::vector<Formula> chain{*quantified};
  std::vector<StepParams> params;
  for (const Term& t : terms) {
    const Formula& f = chain.back();
    if (!f.isBinder() || f.quantifier() != Quantifier::Forall)
      return failure(TacticError::ShapeMismatch, "more terms than leading universal quantifiers");
    std::set<std::string> names;
    collectNames(f, names);
    for (const std::string& v : freeVariables(t)) names.insert(v);
    std::string x = freshName(f.boundName(), names);
    StepParams p;
    p.phi = f.instantiate(Term::variable(x));
    p.x = x;
    p.t = t;
    params.push_back(p);
    chain.push_back(f.instantiate(t));
  }

  Proof proof;
  proof.imports.push_back(fact);
  if (terms.empty()) {
    add(proof, Rule::Restate, fact, {-1});
    return success(std::move(proof));
  }
  const Formula& inst = chain.back();
  int last = add(proof, Rule::Hypothesis, Sequent({inst}, {inst}));
  for (std::size_t j = terms.size(); j-- > 0;)
    last = add(proof, Rule::LeftForall, Sequent({chain[j]}, {inst}), {last}, params[j]);
  Fol2 e;
  StepParams cut;
  cut.phi = *quantified;
  add(proof, Rule::Cut, Sequent(fact.left(), with(without(e, fact.right(), *quantified), inst)), {-1, last}, cut);
  return success(std::move(proof));
}

TacticResult instantiateFact(const Sequent& fact, const FormulaSchemaMap& formulas, const TermSchemaMap& terms,
                             const VariableMap& variables) {
  auto inst = [&](const std::vector<Formula>& side) {
    std::vector<Formula> out;
    for (const Formula& f : side) {
      Formula g = instantiateTermSchemas(instantiatePredicateSchemas(f, formulas), terms);
      out.push_back(variables.empty() ? g : substituteVariables(g, variables));
    }
    return out;
  };
  Proof proof;
  proof.imports.push_back(fact);
  StepParams p;
  p.formulaMap = formulas;
  p.termMap = terms;
  p.varMap = variables;
  try {
    add(proof, Rule::InstSchema, Sequent(inst(fact.left()), inst(fact.right())), {-1}, p);
  } catch (const ArityMismatch& e) {
    return failure(TacticError::ArityMismatch, e.what());
  }
  return success(std::move(proof));
}

namespace {

using Binding = std::map<std::string, Term>;

bool matchTerm(const Term& pattern, const Term& t, const std::set<std::string>& vars, Binding& b) {
  if (pattern.isVariable() && vars.contains(pattern.symbol().name)) {
    if (t.looseBound() > 0) return false;
    auto [it, fresh] = b.emplace(pattern.symbol().name, t);
    return fresh || it->second == t;
  }
  if (pattern.isBound() || t.isBound()) return pattern == t;
  if (pattern.symbol() != t.symbol()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!matchTerm(pattern.args()[i], t.args()[i], vars, b)) return false;
  return true;
}

bool matchFormula(const Formula& pattern, const Formula& f, const std::set<std::string>& vars, Binding& b) {
  if (pattern.tag() != f.tag()) return false;
  switch (pattern.tag()) {
    case Formula::Tag::Predicate:
      if (pattern.symbol() != f.symbol()) return false;
      for (std::size_t i = 0; i < pattern.terms().size(); ++i)
        if (!matchTerm(pattern.terms()[i], f.terms()[i], vars, b)) return false;
      return true;
    case Formula::Tag::Connector:
      if (pattern.connective() != f.connective() || pattern.operands().size() != f.operands().size()) return false;
      if (pattern.connective() == Connective::Schematic && pattern.symbol() != f.symbol()) return false;
      for (std::size_t i = 0; i < pattern.operands().size(); ++i)
        if (!matchFormula(pattern.operands()[i], f.operands()[i], vars, b)) return false;
      return true;
    case Formula::Tag::Binder:
      return pattern.quantifier() == f.quantifier() && matchFormula(pattern.body(), f.body(), vars, b);
  }
  return false;
}

void subterms(const Term& t, const std::function<void(const Term&)>& visit) {
  visit(t);
  if (!t.isBound())
    for (const Term& a : t.args()) subterms(a, visit);
}

void subformulas(const Formula& f, const std::function<void(const Formula&)>& visitF,
                 const std::function<void(const Term&)>& visitT) {
  visitF(f);
  switch (f.tag()) {
    case Formula::Tag::Predicate:
      for (const Term& t : f.terms()) subterms(t, visitT);
      break;
    case Formula::Tag::Connector:
      for (const Formula& o : f.operands()) subformulas(o, visitF, visitT);
      break;
    case Formula::Tag::Binder:
      subformulas(f.body(), visitF, visitT);
      break;
  }
}

// Distinct instances of `pattern` occurring in the formulas.
std::vector<Binding> instances(const Formula& eq, bool term, bool lhs, const std::vector<Formula>& targets,
                               const std::set<std::string>& vars) {
  std::vector<Binding> out;
  auto keep = [&](Binding b) {
    for (const Binding& o : out)
      if (o == b) return;
    out.push_back(std::move(b));
  };
  for (const Formula& f : targets)
    subformulas(
        f,
        [&](const Formula& g) {
          if (term || g.looseBound() > 0) return;
          Binding b;
          if (matchFormula(eq.operands()[lhs ? 0 : 1], g, vars, b)) keep(b);
        },
        [&](const Term& t) {
          if (!term || t.looseBound() > 0) return;
          Binding b;
          if (matchTerm(eq.terms()[lhs ? 0 : 1], t, vars, b)) keep(b);
        });
  return out;
}

}  // namespace

TacticResult substitution(const Sequent& fact, const std::vector<Equation>& equations, Side side) {
  Fol2 e;
  Proof proof;
  proof.imports.push_back(fact);
  int last = -1;
  Sequent cur = fact;
  auto targets = [&] {
    std::vector<Formula> out;
    if (side != Side::Left) out.insert(out.end(), cur.right().begin(), cur.right().end());
    if (side != Side::Right) out.insert(out.end(), cur.left().begin(), cur.left().end());
    return out;
  };

  for (const Equation& eq : equations) {
    const Formula& f = eq.formula;
    bool term = f.isEquality();
    if (!term && !f.is(Connective::Iff))
      return failure(TacticError::ShapeMismatch, printFormula(f) + " is neither an equation nor an equivalence");
    int factAt = 0;
    std::set<std::string> vars;
    if (eq.fact) {
      if (!eq.fact->left().empty() || !eq.fact->rightContains(f))
        return failure(TacticError::ShapeMismatch, "fact " + printSequent(*eq.fact) + " does not state " +
                                                       printFormula(f));
      proof.imports.push_back(*eq.fact);
      factAt = -static_cast<int>(proof.imports.size());
      vars = freeVariables(f);
    }
    bool same = term ? f.terms()[0] == f.terms()[1] : f.operands()[0] == f.operands()[1];
    if (same) continue;

    std::vector<Formula> ts = targets();
    bool lhs = true;
    std::vector<Binding> found;
    switch (eq.orientation) {
      case Orientation::LeftToRight: found = instances(f, term, true, ts, vars); break;
      case Orientation::RightToLeft: found = instances(f, term, false, ts, vars), lhs = false; break;
      case Orientation::Auto: {
        auto l = instances(f, term, true, ts, vars), r = instances(f, term, false, ts, vars);
        if (!l.empty() && !r.empty())
          return failure(TacticError::AmbiguousOrientation,
                         "both sides of " + printFormula(f) + " occur; give an orientation");
        lhs = !l.empty();
        found = lhs ? l : r;
        break;
      }
    }
    if (found.empty()) return failure(TacticError::NoMatch, "nothing matches " + printFormula(f));

    for (const Binding& b : found) {
      Formula inst = b.empty() ? f : substituteVariables(f, VariableMap(b.begin(), b.end()));
      int source = factAt;
      if (eq.fact && !b.empty()) {
        StepParams ip;
        ip.varMap = VariableMap(b.begin(), b.end());
        source = add(proof, Rule::InstSchema, Sequent({}, {inst}), {factAt}, ip);
      }
      std::string hole = "h";
      {
        std::set<std::string> names;
        for (const Formula& g : ts) collectNames(g, names);
        collectNames(inst, names);
        hole = freshName("h", names);
      }
      StepParams p;
      p.hole = hole;
      Formula equation = inst;
      std::function<Formula(const Formula&)> abstract;
      std::function<Formula(const Formula&)> plugTo;
      if (term) {
        Term from = inst.terms()[lhs ? 0 : 1], to = inst.terms()[lhs ? 1 : 0];
        p.s = from;
        p.t = to;
        equation = Formula::equality(from, to);
        Term h = Term::apply(schematicFunction(hole, 0), {});
        abstract = [=](const Formula& g) { return replaceTerm(g, from, h); };
        plugTo = [=](const Formula& ctx) {
          return instantiateTermSchemas(ctx, {{schematicFunction(hole, 0), LambdaTerm{{}, to}}});
        };
      } else {
        Formula from = inst.operands()[lhs ? 0 : 1], to = inst.operands()[lhs ? 1 : 0];
        p.a = from;
        p.b = to;
        equation = Formula::equivalence(from, to);
        Formula h = Formula::predicate(schematicPredicate(hole, 0), {});
        abstract = [=](const Formula& g) { return replaceFormula(g, from, h); };
        plugTo = [=](const Formula& ctx) {
          return instantiatePredicateSchemas(ctx, {{schematicPredicate(hole, 0), LambdaFormula{{}, to}}});
        };
      }
      // One pass over the formulas present before this instance is used.
      for (bool onLeft : {false, true}) {
        if ((onLeft && side == Side::Right) || (!onLeft && side == Side::Left)) continue;
        const std::vector<Formula> snapshot = onLeft ? cur.left() : cur.right();
        for (const Formula& g : snapshot) {
          if (onLeft ? !cur.leftContains(g) : !cur.rightContains(g)) continue;
          Formula ctx = abstract(g);
          if (ctx == g) continue;
          StepParams sp = p;
          sp.context = ctx;
          Rule rule = term ? (onLeft ? Rule::LeftSubstEq : Rule::RightSubstEq)
                           : (onLeft ? Rule::LeftSubstIff : Rule::RightSubstIff);
          std::vector<Formula> l = cur.left(), r = cur.right();
          if (onLeft) l = with(without(e, l, g), plugTo(ctx));
          else r = with(without(e, r, g), plugTo(ctx));
          cur = Sequent(with(l, equation), r);
          last = add(proof, rule, cur, {last}, sp);
        }
      }
      if (eq.fact && last != -1 && cur.leftContains(equation)) {
        StepParams cp;
        cp.phi = equation;
        cur = Sequent(without(e, cur.left(), equation), cur.right());
        last = add(proof, Rule::Cut, cur, {source, last}, cp);
      }
    }
  }
  if (last == -1) add(proof, Rule::Restate, fact, {-1});
  return success(std::move(proof));
}

TacticResult restateAuto(const Sequent& goal, const std::optional<Sequent>& fact) {
  Fol2 e;
  Proof proof;
  if (!fact) {
    if (!e.isTautology(goal))
      return failure(TacticError::NotEquivalent, printSequent(goal) + " is not equivalent to top");
    add(proof, Rule::Restate, goal);
    return success(std::move(proof));
  }
  proof.imports.push_back(*fact);
  if (e.sequentSame(*fact, goal)) {
    add(proof, Rule::Restate, goal, {-1});
  } else if (e.sequentLeq(*fact, goal)) {
    add(proof, Rule::Weakening, goal, {-1});
  } else {
    return failure(TacticError::NotEquivalent, printSequent(*fact) + " does not imply " + printSequent(goal));
  }
  return success(std::move(proof));
}

}  // namespace folproof
