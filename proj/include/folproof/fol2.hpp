#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "folproof/ol.hpp"
#include "folproof/sequent.hpp"
#include "folproof/syntax.hpp"

namespace folproof {

// Maps first-order formulas onto one ortholattice store. Predicate
// applications, equalities, universal formulas and schematic connector
// applications become atoms; everything else is translated connective by
// connective (with ->, <-> and exists rewritten into and/or/not/forall).
//
// Atom identity follows the normal form of the atom's parts: two universal
// formulas share an atom exactly when their bodies are equivalent, two
// connector applications when their arguments are pairwise equivalent, and
// an equality s = t is keyed by the unordered pair {s, t}. Universal atoms are
// ordered by their bodies; distinct atoms are otherwise unrelated.
//
// Instances are not thread safe; use one per thread.
class Fol2 {
 public:
  Fol2();
  Fol2(const Fol2&) = delete;
  Fol2& operator=(const Fol2&) = delete;

  ol::NodeId interpret(const Formula& f);
  ol::NodeId interpret(const Sequent& s);
  ol::NodeId normalize(const Formula& f) { return store_->normalForm(interpret(f)); }

  bool leq(const Formula& f, const Formula& g);
  bool equivalent(const Formula& f, const Formula& g);
  bool sequentLeq(const Sequent& a, const Sequent& b);
  bool sequentSame(const Sequent& a, const Sequent& b);
  bool isTautology(const Sequent& s);

  // Formula built from an (already normal) node; canonical for its class.
  Formula toFormula(ol::NodeId n);
  Formula normalForm(const Formula& f) { return toFormula(normalize(f)); }

  // Representative formula of the atom (normalized).
  Formula atomFormula(ol::AtomId a);
  std::size_t atomCount() const { return atoms_.size(); }

  ol::Store& store() { return *store_; }

 private:
  struct Atom {
    enum class Kind { Predicate, Forall, Connector } kind;
    Formula representative;
    ol::NodeId body = 0;             // Forall
    std::vector<ol::NodeId> args;    // Connector (normal forms)
  };
  struct AtomKey {
    int kind;
    Formula predicate;
    FormulaSymbol symbol;
    std::vector<ol::NodeId> ids;
    auto operator<=>(const AtomKey&) const = default;
    bool operator==(const AtomKey&) const = default;
  };

  ol::NodeId atomNode(AtomKey key, Atom atom);
  bool atomLeq(ol::AtomId a, ol::AtomId b);

  std::unique_ptr<ol::Store> store_;
  std::vector<Atom> atoms_;
  std::map<AtomKey, ol::AtomId> atomIndex_;
  std::unordered_map<Formula, ol::NodeId> cache_;
  std::unordered_map<ol::NodeId, Formula> back_;
};

// Convenience wrappers using a fresh engine per call.
Formula fol2NormalForm(const Formula& f);
bool fol2Leq(const Formula& f, const Formula& g);
bool fol2Equivalent(const Formula& f, const Formula& g);
bool sequentLeq(const Sequent& a, const Sequent& b);
bool sequentSame(const Sequent& a, const Sequent& b);

}  // namespace folproof
