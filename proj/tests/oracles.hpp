// Independent reference models used by the unit and acceptance tests. Nothing
// here calls into the normal-form or order procedures under test.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "folproof/ol.hpp"

namespace oracle {

using folproof::ol::OLTerm;

// Benzene ortholattice: 0 < a < ~b < 1 and 0 < b < ~a < 1.
struct O6 {
  enum : int { Bot = 0, A = 1, B = 2, NA = 3, NB = 4, Top = 5 };

  static bool leq(int x, int y) {
    if (x == y || x == Bot || y == Top) return true;
    return (x == A && y == NB) || (x == B && y == NA);
  }
  static int neg(int x) {
    static constexpr std::array<int, 6> table{Top, NA, NB, A, B, Bot};
    return table[x];
  }
  static int join(int x, int y) {
    int best = -1;
    for (int z = 0; z < 6; ++z)
      if (leq(x, z) && leq(y, z) && (best < 0 || leq(z, best))) best = z;
    return best;
  }
  static int meet(int x, int y) { return neg(join(neg(x), neg(y))); }
};

template <typename Lattice, typename Value>
Value evaluate(const OLTerm& t, const std::vector<Value>& env, Value zero, Value one) {
  switch (t.kind) {
    case OLTerm::Kind::Zero: return zero;
    case OLTerm::Kind::One: return one;
    case OLTerm::Kind::Var: return env.at(t.var);
    case OLTerm::Kind::Not: return Lattice::neg(evaluate<Lattice, Value>(t.children[0], env, zero, one));
    case OLTerm::Kind::And: {
      Value v = one;
      for (const OLTerm& c : t.children) v = Lattice::meet(v, evaluate<Lattice, Value>(c, env, zero, one));
      return v;
    }
    case OLTerm::Kind::Or: {
      Value v = zero;
      for (const OLTerm& c : t.children) v = Lattice::join(v, evaluate<Lattice, Value>(c, env, zero, one));
      return v;
    }
  }
  return zero;
}

inline int evalO6(const OLTerm& t, const std::vector<int>& env) { return evaluate<O6, int>(t, env, O6::Bot, O6::Top); }

// True when s <= t under every assignment of `atoms` variables into O6.
inline bool o6Leq(const OLTerm& s, const OLTerm& t, int atoms) {
  std::vector<int> env(atoms, 0);
  for (;;) {
    if (!O6::leq(evalO6(s, env), evalO6(t, env))) return false;
    int i = 0;
    while (i < atoms && ++env[i] == 6) env[i++] = 0;
    if (i == atoms) return true;
  }
}

struct Bool {
  static bool neg(bool x) { return !x; }
  static bool meet(bool x, bool y) { return x && y; }
  static bool join(bool x, bool y) { return x || y; }
};

// Bit i of the result is the value under the assignment encoded by i.
inline std::uint32_t truthTable(const OLTerm& t, int atoms) {
  std::uint32_t table = 0;
  for (std::uint32_t row = 0; row < (1u << atoms); ++row) {
    std::vector<bool> env(atoms);
    for (int i = 0; i < atoms; ++i) env[i] = (row >> i) & 1u;
    if (evaluate<Bool, bool>(t, env, false, true)) table |= 1u << row;
  }
  return table;
}

inline OLTerm notT(OLTerm a) { return OLTerm::negation(std::move(a)); }
inline OLTerm andT(OLTerm a, OLTerm b) { return OLTerm::meet(std::move(a), std::move(b)); }
inline OLTerm orT(OLTerm a, OLTerm b) { return OLTerm::join(std::move(a), std::move(b)); }
inline OLTerm var(folproof::ol::AtomId i) { return OLTerm::atom(i); }

// Random binary term; leaves are atoms or (rarely) constants.
inline OLTerm randomTerm(std::mt19937& rng, int depth, int atoms, bool constants = true) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = pick(rng);
  if (depth <= 0 || r < 2) {
    if (constants && r == 0 && pick(rng) < 2) return pick(rng) < 5 ? OLTerm::zero() : OLTerm::one();
    return var(std::uniform_int_distribution<int>(0, atoms - 1)(rng));
  }
  if (r < 4) return notT(randomTerm(rng, depth - 1, atoms, constants));
  OLTerm a = randomTerm(rng, depth - 1, atoms, constants);
  OLTerm b = randomTerm(rng, depth - 1, atoms, constants);
  return r < 7 ? andT(std::move(a), std::move(b)) : orT(std::move(a), std::move(b));
}

// The seventeen identities of the ortholattice theory as (lhs, rhs) in x, y, z.
struct Law {
  const char* name;
  std::function<OLTerm(const OLTerm&, const OLTerm&, const OLTerm&)> lhs, rhs;
};

inline const std::vector<Law>& laws() {
  using T = const OLTerm&;
  static const std::vector<Law> all = {
      {"L1", [](T x, T y, T) { return orT(x, y); }, [](T x, T y, T) { return orT(y, x); }},
      {"L1'", [](T x, T y, T) { return andT(x, y); }, [](T x, T y, T) { return andT(y, x); }},
      {"L2", [](T x, T y, T z) { return orT(x, orT(y, z)); }, [](T x, T y, T z) { return orT(orT(x, y), z); }},
      {"L2'", [](T x, T y, T z) { return andT(x, andT(y, z)); }, [](T x, T y, T z) { return andT(andT(x, y), z); }},
      {"L3", [](T x, T, T) { return orT(x, x); }, [](T x, T, T) { return x; }},
      {"L3'", [](T x, T, T) { return andT(x, x); }, [](T x, T, T) { return x; }},
      {"L4", [](T x, T, T) { return orT(x, OLTerm::one()); }, [](T, T, T) { return OLTerm::one(); }},
      {"L4'", [](T x, T, T) { return andT(x, OLTerm::zero()); }, [](T, T, T) { return OLTerm::zero(); }},
      {"L5", [](T x, T, T) { return orT(x, OLTerm::zero()); }, [](T x, T, T) { return x; }},
      {"L5'", [](T x, T, T) { return andT(x, OLTerm::one()); }, [](T x, T, T) { return x; }},
      {"L6", [](T x, T, T) { return notT(notT(x)); }, [](T x, T, T) { return x; }},
      {"L7", [](T x, T, T) { return orT(x, notT(x)); }, [](T, T, T) { return OLTerm::one(); }},
      {"L7'", [](T x, T, T) { return andT(x, notT(x)); }, [](T, T, T) { return OLTerm::zero(); }},
      {"L8", [](T x, T y, T) { return notT(orT(x, y)); }, [](T x, T y, T) { return andT(notT(x), notT(y)); }},
      {"L8'", [](T x, T y, T) { return notT(andT(x, y)); }, [](T x, T y, T) { return orT(notT(x), notT(y)); }},
      {"L9", [](T x, T y, T) { return orT(x, andT(x, y)); }, [](T x, T, T) { return x; }},
      {"L9'", [](T x, T y, T) { return andT(x, orT(x, y)); }, [](T x, T, T) { return x; }},
  };
  return all;
}

// Decides s <= t by cut-free proof search in the orthologic sequent
// calculus on plain trees: one-sided sequents of at most two annotated
// formulas, s^L and t^R here, joins and meets flattened. A join on the right
// (meet on the left) standing alone may be contracted: it is kept as a
// pinned second formula next to one of its operands. Shares no code with
// the store.
class OLSearch {
 public:
  bool leq(const OLTerm& s, const OLTerm& t) {
    memo_.clear();
    terms_.clear();
    return prove({intern(flatten(s)), false}, {intern(flatten(t)), true}, false);
  }

 private:
  struct Signed {
    const OLTerm* term;
    bool right;
  };
  using Key = std::tuple<const OLTerm*, bool, const OLTerm*, bool, bool>;
  std::map<Key, bool> memo_;
  std::set<OLTerm> terms_;

  // Canonical address, so that the memo recognises equal subterms.
  const OLTerm* intern(OLTerm t) { return &*terms_.insert(std::move(t)).first; }

  static OLTerm flatten(const OLTerm& t) {
    OLTerm out{t.kind, t.var, {}};
    for (const OLTerm& c : t.children) {
      OLTerm f = flatten(c);
      if (f.kind == t.kind && t.kind != OLTerm::Kind::Not)
        for (OLTerm& g : f.children) out.children.push_back(std::move(g));
      else
        out.children.push_back(std::move(f));
    }
    return out;
  }

  static bool constant(Signed x) {
    return (x.right && x.term->kind == OLTerm::Kind::One) || (!x.right && x.term->kind == OLTerm::Kind::Zero);
  }
  // Joins on the right and meets on the left: one operand suffices.
  static bool choosing(Signed x) {
    return (x.term->kind == OLTerm::Kind::Or && x.right) || (x.term->kind == OLTerm::Kind::And && !x.right);
  }

  // Decomposes x next to `rest` (may be empty; `pinned` if it must stay).
  bool decompose(Signed x, Signed rest, bool pinned) {
    const auto& cs = x.term->children;
    switch (x.term->kind) {
      case OLTerm::Kind::Not: return prove({intern(cs[0]), !x.right}, rest, pinned);
      case OLTerm::Kind::And:
      case OLTerm::Kind::Or: {
        bool any = choosing(x);
        for (const OLTerm& c : cs) {
          bool ok = prove({intern(c), x.right}, rest, pinned);
          if (any && ok) return true;
          if (!any && !ok) return false;
        }
        if (!any) return true;
        if (rest.term) return false;
        for (const OLTerm& c : cs)
          if (prove({intern(c), x.right}, x, true)) return true;
        return false;
      }
      default: return false;
    }
  }

  bool prove(Signed a, Signed b, bool pinned) {
    Key key{a.term, a.right, b.term, b.right, pinned};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r;
    if (!b.term) {
      r = constant(a) || decompose(a, {nullptr, false}, false);
    } else if (pinned) {
      // b is a contracted join (meet): it is decomposed by choosing an
      // operand, never dropped.
      r = constant(a) || decompose(a, b, true);
      for (const OLTerm& c : b.term->children) {
        if (r) break;
        Signed o{intern(c), b.right};
        r = (a.right != o.right && a.term == o.term) || constant(o) || prove(a, o, false);
      }
    } else {
      r = constant(a) || constant(b) || (a.right != b.right && a.term == b.term) ||
          prove(a, {nullptr, false}, false) || prove(b, {nullptr, false}, false) || decompose(a, b, false) ||
          decompose(b, a, false);
    }
    memo_.emplace(key, r);
    return r;
  }
};

// Rewrites the subterm at pre-order position `pos` with a law applied in
// whichever direction fits. Returns false when no law applies there.
inline bool rewriteAt(OLTerm& t, std::size_t& pos, std::mt19937& rng, int atoms) {
  if (pos > 0) {
    --pos;
    for (OLTerm& c : t.children)
      if (pos < c.size()) return rewriteAt(c, pos, rng, atoms);
      else pos -= c.size();
    return false;
  }
  // Expanding direction: any subterm x may become one of the larger sides.
  std::uniform_int_distribution<int> pick(0, 7);
  OLTerm y = randomTerm(rng, 2, atoms);
  switch (pick(rng)) {
    case 0: t = orT(t, t); return true;                      // L3 backwards
    case 1: t = andT(t, OLTerm::one()); return true;         // L5' backwards
    case 2: t = notT(notT(t)); return true;                  // L6 backwards
    case 3: t = orT(t, andT(t, y)); return true;             // L9 backwards
    case 4: t = andT(t, orT(t, y)); return true;             // L9' backwards
    default: break;
  }
  // Contracting or shuffling direction on the current shape.
  switch (t.kind) {
    case OLTerm::Kind::And:
    case OLTerm::Kind::Or: {
      bool isAnd = t.kind == OLTerm::Kind::And;
      OLTerm a = t.children[0], b = t.children[1];
      if (pick(rng) < 4) {
        std::swap(t.children[0], t.children[1]);  // L1 / L1'
        return true;
      }
      if (b.kind == t.kind) {  // L2 / L2'
        OLTerm inner = isAnd ? andT(a, b.children[0]) : orT(a, b.children[0]);
        t = isAnd ? andT(std::move(inner), b.children[1]) : orT(std::move(inner), b.children[1]);
        return true;
      }
      if (a == b) {  // L3 / L3'
        t = a;
        return true;
      }
      t = notT(isAnd ? orT(notT(a), notT(b)) : andT(notT(a), notT(b)));  // L8 / L8' read through L6
      return true;
    }
    case OLTerm::Kind::Not: {
      OLTerm a = t.children[0];
      if (a.kind == OLTerm::Kind::Not) {
        t = a.children[0];
        return true;
      }
      if (a.kind == OLTerm::Kind::And || a.kind == OLTerm::Kind::Or) {
        bool isAnd = a.kind == OLTerm::Kind::And;
        t = isAnd ? orT(notT(a.children[0]), notT(a.children[1])) : andT(notT(a.children[0]), notT(a.children[1]));
        return true;
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace oracle
