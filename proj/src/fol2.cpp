#include "folproof/fol2.hpp"

#include <algorithm>

namespace folproof {

Sequent::Sequent(std::vector<Formula> left, std::vector<Formula> right) : left_(std::move(left)), right_(std::move(right)) {
  for (auto* side : {&left_, &right_}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
}

bool Sequent::leftContains(const Formula& f) const { return std::binary_search(left_.begin(), left_.end(), f); }
bool Sequent::rightContains(const Formula& f) const { return std::binary_search(right_.begin(), right_.end(), f); }

namespace {

Formula fold(const std::vector<Formula>& fs, Connective op, const Formula& empty) {
  if (fs.empty()) return empty;
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::connector(op, {fs[i], acc});
  return acc;
}

}  // namespace

Formula interpretation(const Sequent& s) {
  Formula rhs = fold(s.right(), Connective::Or, Formula::bottom());
  if (s.left().empty()) return rhs;
  return Formula::implication(fold(s.left(), Connective::And, Formula::top()), rhs);
}

std::set<std::string> freeVariables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto* side : {&s.left(), &s.right()})
    for (const Formula& f : *side) out.merge(freeVariables(f));
  return out;
}

// ---------------------------------------------------------------------------

Fol2::Fol2() : store_(std::make_unique<ol::Store>([this](ol::AtomId a, ol::AtomId b) { return atomLeq(a, b); })) {}

bool Fol2::atomLeq(ol::AtomId a, ol::AtomId b) {
  const Atom& x = atoms_[a];
  const Atom& y = atoms_[b];
  if (x.kind != Atom::Kind::Forall || y.kind != Atom::Kind::Forall) return false;
  return store_->leq(x.body, y.body);
}

ol::NodeId Fol2::atomNode(AtomKey key, Atom atom) {
  auto it = atomIndex_.find(key);
  if (it != atomIndex_.end()) return store_->literal(it->second);
  auto id = static_cast<ol::AtomId>(atoms_.size());
  atoms_.push_back(std::move(atom));
  atomIndex_.emplace(std::move(key), id);
  return store_->literal(id);
}

ol::NodeId Fol2::interpret(const Formula& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  ol::Store& s = *store_;
  ol::NodeId r = s.zero();
  switch (f.tag()) {
    case Formula::Tag::Predicate: {
      if (f.isTop()) {
        r = s.one();
      } else if (f.isBottom()) {
        r = s.zero();
      } else if (f.isEquality()) {
        const Term& a = f.terms()[0];
        const Term& b = f.terms()[1];
        if (a == b) {
          r = s.one();
        } else {
          Formula key = b < a ? Formula::equality(b, a) : f;
          r = atomNode(AtomKey{0, key, {}, {}}, Atom{Atom::Kind::Predicate, key, 0, {}});
        }
      } else {
        r = atomNode(AtomKey{0, f, {}, {}}, Atom{Atom::Kind::Predicate, f, 0, {}});
      }
      break;
    }
    case Formula::Tag::Connector: {
      auto ops = f.operands();
      switch (f.connective()) {
        case Connective::Not: r = s.negate(interpret(ops[0])); break;
        case Connective::And: r = s.meet(interpret(ops[0]), interpret(ops[1])); break;
        case Connective::Or: r = s.join(interpret(ops[0]), interpret(ops[1])); break;
        case Connective::Implies: r = s.implies(interpret(ops[0]), interpret(ops[1])); break;
        case Connective::Iff: r = s.iff(interpret(ops[0]), interpret(ops[1])); break;
        case Connective::Schematic: {
          std::vector<ol::NodeId> ids;
          std::vector<Formula> args;
          for (const Formula& o : ops) {
            ids.push_back(normalize(o));
            args.push_back(toFormula(ids.back()));
          }
          Formula rep = Formula::schematic(f.symbol(), std::move(args));
          r = atomNode(AtomKey{2, Formula::top(), f.symbol(), ids}, Atom{Atom::Kind::Connector, rep, 0, ids});
          break;
        }
      }
      break;
    }
    case Formula::Tag::Binder: {
      ol::NodeId body = interpret(f.body());
      bool exists = f.quantifier() == Quantifier::Exists;
      if (exists) body = s.negate(body);
      body = s.normalForm(body);
      Formula rep = Formula::binder(Quantifier::Forall, f.boundName(), toFormula(body));
      r = atomNode(AtomKey{1, Formula::top(), {}, {body}}, Atom{Atom::Kind::Forall, rep, body, {}});
      if (exists) r = s.negate(r);
      break;
    }
  }
  cache_.emplace(f, r);
  return r;
}

ol::NodeId Fol2::interpret(const Sequent& q) {
  ol::Store& s = *store_;
  std::vector<ol::NodeId> parts;
  for (const Formula& f : q.left()) parts.push_back(s.negate(interpret(f)));
  for (const Formula& f : q.right()) parts.push_back(interpret(f));
  return s.join(std::move(parts));
}

bool Fol2::leq(const Formula& f, const Formula& g) { return store_->leq(interpret(f), interpret(g)); }
bool Fol2::equivalent(const Formula& f, const Formula& g) { return normalize(f) == normalize(g); }

bool Fol2::sequentLeq(const Sequent& a, const Sequent& b) { return store_->leq(interpret(a), interpret(b)); }
bool Fol2::sequentSame(const Sequent& a, const Sequent& b) {
  return store_->normalForm(interpret(a)) == store_->normalForm(interpret(b));
}
bool Fol2::isTautology(const Sequent& s) { return store_->normalForm(interpret(s)) == store_->one(); }

Formula Fol2::atomFormula(ol::AtomId a) { return atoms_[a].representative; }

Formula Fol2::toFormula(ol::NodeId n) {
  if (auto it = back_.find(n); it != back_.end()) return it->second;
  ol::Store& s = *store_;
  Formula r = Formula::top();
  switch (s.kind(n)) {
    case ol::Store::Kind::Zero: r = Formula::bottom(); break;
    case ol::Store::Kind::One: r = Formula::top(); break;
    case ol::Store::Kind::Literal: {
      Formula a = atoms_[s.atom(n)].representative;
      r = s.positive(n) ? a : Formula::negation(a);
      break;
    }
    case ol::Store::Kind::And:
    case ol::Store::Kind::Or: {
      std::vector<Formula> kids;
      std::vector<ol::NodeId> ids = s.children(n);
      for (ol::NodeId c : ids) kids.push_back(toFormula(c));
      std::sort(kids.begin(), kids.end());
      bool isAnd = s.kind(n) == ol::Store::Kind::And;
      r = fold(kids, isAnd ? Connective::And : Connective::Or, isAnd ? Formula::top() : Formula::bottom());
      break;
    }
  }
  back_.emplace(n, r);
  return r;
}

Formula fol2NormalForm(const Formula& f) {
  Fol2 e;
  return e.normalForm(f);
}
bool fol2Leq(const Formula& f, const Formula& g) {
  Fol2 e;
  return e.leq(f, g);
}
bool fol2Equivalent(const Formula& f, const Formula& g) {
  Fol2 e;
  return e.equivalent(f, g);
}
bool sequentLeq(const Sequent& a, const Sequent& b) {
  Fol2 e;
  return e.sequentLeq(a, b);
}
bool sequentSame(const Sequent& a, const Sequent& b) {
  Fol2 e;
  return e.sequentSame(a, b);
}

}  // namespace folproof
