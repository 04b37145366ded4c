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

#include "folproof/ol.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace folproof::ol {

namespace {

constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();
constexpr std::int8_t kUnknown = 0, kFalse = 1, kTrue = 2, kBusy = 3;

std::uint64_t pairKey(NodeId a, NodeId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

}  // namespace

// ---------------------------------------------------------------------------
// OLTerm

std::size_t OLTerm::size() const {
  std::size_t n = 1;
  for (const OLTerm& c : children) n += c.size();
  return n;
}

std::string OLTerm::toString() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Var: return "x" + std::to_string(var);
    case Kind::Not: return "~" + children[0].toString();
    case Kind::And:
    case Kind::Or: {
      std::string s = "(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += kind == Kind::And ? " /\\ " : " \\/ ";
        s += children[i].toString();
      }
      return s + ")";
    }
  }
  return {};
}

std::strong_ordering operator<=>(const OLTerm& a, const OLTerm& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  if (auto c = a.children.size() <=> b.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Store construction

std::size_t Store::KeyHash::operator()(const Node& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind) * 1000003u ^ (static_cast<std::size_t>(n.atom) << 1) ^ n.positive;
  for (NodeId c : n.children) h = h * 0x100000001b3ULL ^ c;
  return h;
}

Store::Store() : Store(AtomOrder{}) {}

Store::Store(AtomOrder atomLeq) : atomLeq_(std::move(atomLeq)) {
  make(Node{Kind::Zero, 0, true, {}});
  make(Node{Kind::One, 0, true, {}});
  negation_[0] = 1;
  negation_[1] = 0;
}

NodeId Store::make(Node node) {
  auto it = table_.find(node);
  if (it != table_.end()) return it->second;
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(node);
  negation_.push_back(kUnset);
  normal_.push_back(kUnset);
  alone_.push_back(kUnknown);
  table_.emplace(std::move(node), id);
  return id;
}

NodeId Store::literal(AtomId atom, bool positive) { return make(Node{Kind::Literal, atom, positive, {}}); }

NodeId Store::gather(Kind kind, std::vector<NodeId> children) {
  std::vector<NodeId> flat;
  flat.reserve(children.size());
  for (NodeId c : children) {
    if (nodes_[c].kind == kind) {
      const auto& grand = nodes_[c].children;
      flat.insert(flat.end(), grand.begin(), grand.end());
    } else {
      flat.push_back(c);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kind == Kind::And ? one() : zero();
  if (flat.size() == 1) return flat.front();
  return make(Node{kind, 0, true, std::move(flat)});
}

NodeId Store::meet(std::vector<NodeId> children) { return gather(Kind::And, std::move(children)); }
NodeId Store::join(std::vector<NodeId> children) { return gather(Kind::Or, std::move(children)); }

NodeId Store::iff(NodeId a, NodeId b) { return join(meet(a, b), meet(negate(a), negate(b))); }

NodeId Store::negate(NodeId n) {
  if (negation_[n] != kUnset) return negation_[n];
  NodeId r = kUnset;
  switch (nodes_[n].kind) {
    case Kind::Zero: r = one(); break;
    case Kind::One: r = zero(); break;
    case Kind::Literal: r = literal(nodes_[n].atom, !nodes_[n].positive); break;
    case Kind::And:
    case Kind::Or: {
      std::vector<NodeId> kids = nodes_[n].children;
      for (NodeId& k : kids) k = negate(k);
      r = gather(nodes_[n].kind == Kind::And ? Kind::Or : Kind::And, std::move(kids));
      break;
    }
  }
  negation_[n] = r;
  negation_[r] = n;
  return r;
}

NodeId Store::intern(const OLTerm& t) {
  switch (t.kind) {
    case OLTerm::Kind::Zero: return zero();
    case OLTerm::Kind::One: return one();
    case OLTerm::Kind::Var: return literal(t.var, true);
    case OLTerm::Kind::Not: return negate(intern(t.children.at(0)));
    case OLTerm::Kind::And:
    case OLTerm::Kind::Or: {
      std::vector<NodeId> kids;
      kids.reserve(t.children.size());
      for (const OLTerm& c : t.children) kids.push_back(intern(c));
      return gather(t.kind == OLTerm::Kind::And ? Kind::And : Kind::Or, std::move(kids));
    }
  }
  return zero();
}

OLTerm Store::toTerm(NodeId n) const {
  const Node& node = nodes_[n];
  switch (node.kind) {
    case Kind::Zero: return OLTerm::zero();
    case Kind::One: return OLTerm::one();
    case Kind::Literal:
      return node.positive ? OLTerm::atom(node.atom) : OLTerm::negation(OLTerm::atom(node.atom));
    case Kind::And:
    case Kind::Or: {
      OLTerm t{node.kind == Kind::And ? OLTerm::Kind::And : OLTerm::Kind::Or, 0, {}};
      for (NodeId c : node.children) t.children.push_back(toTerm(c));
      std::sort(t.children.begin(), t.children.end());
      return t;
    }
  }
  return OLTerm::zero();
}

// ---------------------------------------------------------------------------
// Order

bool Store::leq(NodeId a, NodeId b) { return prove(negate(a), b); }

bool Store::literalPair(NodeId x, NodeId y) {
  const Node& a = nodes_[x];
  const Node& b = nodes_[y];
  if (a.positive == b.positive) return false;
  // |- ~A, B  <=>  A <= B
  AtomId lower = a.positive ? b.atom : a.atom;
  AtomId upper = a.positive ? a.atom : b.atom;
  if (lower == upper) return true;
  return atomLeq_ && atomLeq_(lower, upper);
}

// |- x alone. A disjunction may be used twice (contraction), which is what
// proveRooted explores without ever dropping the root again.
bool Store::proveAlone(NodeId x) {
  if (alone_[x] == kTrue) return true;
  if (alone_[x] == kFalse || alone_[x] == kBusy) return false;
  alone_[x] = kBusy;
  bool r = false;
  switch (nodes_[x].kind) {
    case Kind::One: r = true; break;
    case Kind::Zero:
    case Kind::Literal: r = false; break;
    case Kind::And: {
      r = true;
      std::vector<NodeId> kids = nodes_[x].children;
      for (NodeId c : kids)
        if (!proveAlone(c)) {
          r = false;
          break;
        }
      break;
    }
    case Kind::Or: {
      std::vector<NodeId> kids = nodes_[x].children;
      for (NodeId c : kids)
        if (proveRooted(c, x)) {
          r = true;
          break;
        }
      break;
    }
  }
  alone_[x] = r ? kTrue : kFalse;
  return r;
}

// |- x, root where `root` is a disjunction that may still be decomposed but
// never weakened away.
bool Store::proveRooted(NodeId x, NodeId root) {
  std::uint64_t key = pairKey(x, root);
  auto it = rooted_.find(key);
  if (it != rooted_.end()) return it->second == kTrue;
  rooted_[key] = kBusy;
  bool r = false;
  if (x == one() || proveAlone(x)) {
    r = true;
  } else {
    std::vector<NodeId> rootKids = nodes_[root].children;
    for (NodeId c : rootKids)
      if (prove(x, c)) {
        r = true;
        break;
      }
    if (!r && (nodes_[x].kind == Kind::And || nodes_[x].kind == Kind::Or)) {
      bool all = nodes_[x].kind == Kind::And;
      std::vector<NodeId> kids = nodes_[x].children;
      bool acc = all;
      for (NodeId c : kids) {
        bool v = proveRooted(c, root);
        if (all && !v) {
          acc = false;
          break;
        }
        if (!all && v) {
          acc = true;
          break;
        }
      }
      r = acc;
    }
  }
  rooted_[key] = r ? kTrue : kFalse;
  return r;
}

// |- x, y
bool Store::prove(NodeId x, NodeId y) {
  if (x > y) std::swap(x, y);
  if (x == y) return proveAlone(x);
  if (x == one() || y == one()) return true;
  if (x == zero()) return proveAlone(y);
  std::uint64_t key = pairKey(x, y);
  auto it = pairs_.find(key);
  if (it != pairs_.end()) return it->second == kTrue;
  pairs_[key] = kBusy;

  bool r = proveAlone(x) || proveAlone(y);
  if (!r && nodes_[x].kind == Kind::Literal && nodes_[y].kind == Kind::Literal) r = literalPair(x, y);
  for (int side = 0; side < 2 && !r; ++side) {
    NodeId a = side == 0 ? x : y;
    NodeId b = side == 0 ? y : x;
    Kind k = nodes_[a].kind;
    if (k != Kind::And && k != Kind::Or) continue;
    std::vector<NodeId> kids = nodes_[a].children;
    if (k == Kind::And) {
      r = std::all_of(kids.begin(), kids.end(), [&](NodeId c) { return prove(c, b); });
    } else {
      r = std::any_of(kids.begin(), kids.end(), [&](NodeId c) { return prove(c, b); });
    }
  }
  pairs_[key] = r ? kTrue : kFalse;
  return r;
}

// ---------------------------------------------------------------------------
// Normal form

NodeId Store::normalForm(NodeId n) {
  if (normal_[n] != kUnset) return normal_[n];
  NodeId r = n;
  Kind k = nodes_[n].kind;
  if (k == Kind::And || k == Kind::Or) {
    std::vector<NodeId> kids = nodes_[n].children;
    r = normalizeLattice(k, kids);
  }
  normal_[n] = r;
  if (normal_[r] == kUnset) normal_[r] = r;
  return r;
}

bool Store::isNormal(NodeId n) { return normalForm(n) == n; }

// Meets (and dually joins) are normal when their children are normal, no
// child absorbs another, the whole is not 0, and no disjunctive child can be
// narrowed to one of its own disjuncts without changing the value.
NodeId Store::normalizeLattice(Kind kind, const std::vector<NodeId>& input) {
  const bool isMeet = kind == Kind::And;
  const Kind dual = isMeet ? Kind::Or : Kind::And;
  const NodeId absorbing = isMeet ? zero() : one();
  const NodeId identity = isMeet ? one() : zero();
  auto below = [&](NodeId a, NodeId b) { return isMeet ? leq(a, b) : leq(b, a); };

  std::vector<NodeId> s;
  auto push = [&](NodeId m) {
    if (nodes_[m].kind == kind) {
      const auto& g = nodes_[m].children;
      s.insert(s.end(), g.begin(), g.end());
    } else if (m != identity) {
      s.push_back(m);
    }
  };
  for (NodeId c : input) {
    NodeId m = normalForm(c);
    if (m == absorbing) return absorbing;
    push(m);
  }

  for (;;) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) return identity;
    if (s.size() == 1) return s.front();

    std::vector<NodeId> keep;
    for (std::size_t j = 0; j < s.size(); ++j) {
      bool absorbed = false;
      for (std::size_t i = 0; i < s.size() && !absorbed; ++i) {
        if (i == j || !below(s[i], s[j])) continue;
        absorbed = !below(s[j], s[i]) || i < j;
      }
      if (!absorbed) keep.push_back(s[j]);
    }
    s = std::move(keep);
    if (s.size() == 1) return s.front();

    NodeId whole = gather(kind, s);
    if (isMeet ? leq(whole, zero()) : leq(one(), whole)) return absorbing;

    bool changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i) {
      if (nodes_[s[i]].kind != dual) continue;
      std::vector<NodeId> options = nodes_[s[i]].children;
      for (NodeId d : options) {
        if (!below(whole, d)) continue;
        NodeId old = s[i];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        (void)old;
        push(d);
        changed = true;
        break;
      }
    }
    if (!changed) return whole;
  }
}

}  // namespace folproof::ol
