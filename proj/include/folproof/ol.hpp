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
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace folproof::ol {

using AtomId = std::uint32_t;
using NodeId = std::uint32_t;

// Value-level term over the ortholattice signature (and, or, not, 0, 1).
struct OLTerm {
  enum class Kind : std::uint8_t { Zero, One, Var, Not, And, Or };

  Kind kind = Kind::Zero;
  AtomId var = 0;
  std::vector<OLTerm> children;

  static OLTerm zero() { return {Kind::Zero, 0, {}}; }
  static OLTerm one() { return {Kind::One, 0, {}}; }
  static OLTerm atom(AtomId a) { return {Kind::Var, a, {}}; }
  static OLTerm negation(OLTerm t) { return {Kind::Not, 0, {std::move(t)}}; }
  static OLTerm meet(OLTerm a, OLTerm b) { return {Kind::And, 0, {std::move(a), std::move(b)}}; }
  static OLTerm join(OLTerm a, OLTerm b) { return {Kind::Or, 0, {std::move(a), std::move(b)}}; }

  std::size_t size() const;
  std::string toString() const;

  friend std::strong_ordering operator<=>(const OLTerm& a, const OLTerm& b);
  friend bool operator==(const OLTerm& a, const OLTerm& b) { return (a <=> b) == 0; }
};

// Hash-consed DAG of terms in negation normal form together with the
// memoized order and normal-form procedures. Negation only ever appears on
// atoms; `negate` maps every node to its De Morgan dual in constant amortized
// time.
//
// The order is decided by cut-free proof search in the two-formula sequent
// calculus for ortholattices: `prove(x, y)` holds iff 1 <= x or y. Every
// recursive call shrinks a pair of DAG nodes, so with memoization the work is
// bounded by the number of node pairs.
class Store {
 public:
  enum class Kind : std::uint8_t { Zero, One, Literal, And, Or };

  // `atomLeq(a, b)` may relate distinct atoms (a <= b); it must be a preorder
  // compatible with identity and may call back into this store.
  using AtomOrder = std::function<bool(AtomId, AtomId)>;

  Store();
  explicit Store(AtomOrder atomLeq);
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  NodeId zero() const { return 0; }
  NodeId one() const { return 1; }
  NodeId literal(AtomId atom, bool positive = true);
  NodeId negate(NodeId n);
  NodeId meet(std::vector<NodeId> children);
  NodeId join(std::vector<NodeId> children);
  NodeId meet(NodeId a, NodeId b) { return meet(std::vector<NodeId>{a, b}); }
  NodeId join(NodeId a, NodeId b) { return join(std::vector<NodeId>{a, b}); }
  NodeId implies(NodeId a, NodeId b) { return join(negate(a), b); }
  // (a and b) or (not a and not b), sharing both operands.
  NodeId iff(NodeId a, NodeId b);
  NodeId intern(const OLTerm& t);

  bool leq(NodeId a, NodeId b);
  bool equivalent(NodeId a, NodeId b) { return normalForm(a) == normalForm(b); }
  NodeId normalForm(NodeId n);
  bool isNormal(NodeId n);

  Kind kind(NodeId n) const { return nodes_[n].kind; }
  AtomId atom(NodeId n) const { return nodes_[n].atom; }
  bool positive(NodeId n) const { return nodes_[n].positive; }
  const std::vector<NodeId>& children(NodeId n) const { return nodes_[n].children; }
  std::size_t size() const { return nodes_.size(); }

  // Canonical value form: children are sorted by the structural OLTerm order
  // so results from different stores are comparable.
  OLTerm toTerm(NodeId n) const;

 private:
  struct Node {
    Kind kind;
    AtomId atom = 0;
    bool positive = true;
    std::vector<NodeId> children;
  };
  struct KeyHash {
    std::size_t operator()(const Node& n) const;
  };
  struct KeyEq {
    bool operator()(const Node& a, const Node& b) const {
      return a.kind == b.kind && a.atom == b.atom && a.positive == b.positive && a.children == b.children;
    }
  };

  NodeId make(Node node);
  NodeId gather(Kind kind, std::vector<NodeId> children);
  bool prove(NodeId x, NodeId y);
  bool proveAlone(NodeId x);
  bool proveRooted(NodeId x, NodeId root);
  bool literalPair(NodeId x, NodeId y);
  NodeId normalizeLattice(Kind kind, const std::vector<NodeId>& input);

  AtomOrder atomLeq_;
  std::vector<Node> nodes_;
  std::vector<NodeId> negation_;
  std::vector<NodeId> normal_;
  std::vector<std::int8_t> alone_;
  std::unordered_map<Node, NodeId, KeyHash, KeyEq> table_;
  std::unordered_map<std::uint64_t, std::int8_t> pairs_;
  std::unordered_map<std::uint64_t, std::int8_t> rooted_;
};

}  // namespace folproof::ol
