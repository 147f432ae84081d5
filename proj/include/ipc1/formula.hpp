/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ipc1/rn_index.hpp"

namespace ipc1 {

enum class NodeKind : std::uint8_t { Var, Bot, And, Or, Impl };

inline bool is_binary(NodeKind k) {
  return k == NodeKind::And || k == NodeKind::Or || k == NodeKind::Impl;
}

// Largest rank rn_formula builds unless told otherwise. The tree length of
// the ladder formulas grows like the Fibonacci numbers.
inline constexpr std::uint32_t kDefaultRankCap = 32;

// Immutable formula tree over the single variable `a`.
//
// Subtrees may be physically shared in memory (rn_formula relies on that to
// stay linear in the rank), but every query treats the value as a tree:
// length() counts nodes with multiplicity and operator== compares structure.
// Copies are cheap; values are safe to share between threads.
class Formula {
 public:
  // Default-constructed formula is `a`.
  Formula();

  static Formula var();
  static Formula bot();
  static Formula top();  // bot -> bot
  static Formula neg(Formula f);  // f -> bot
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula impl(Formula l, Formula r);
  static Formula binary(NodeKind kind, Formula l, Formula r);

  NodeKind kind() const;
  // Children; only meaningful for binary kinds.
  const Formula& left() const;
  const Formula& right() const;

  // Number of variable, constant and connective occurrences, saturating at
  // UINT64_MAX.
  std::uint64_t length() const;

  // Address of the underlying node. Equal ids imply equal formulas; used as
  // a memo key when folding over shared trees.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& x, const Formula& y);

 private:
  struct Node;
  struct NullTag {};
  explicit Formula(NullTag) {}
  explicit Formula(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

struct Formula::Node {
  NodeKind kind;
  Formula left;
  Formula right;
  std::uint64_t length;

  Node(NodeKind k, Formula l, Formula r, std::uint64_t len)
      : kind(k), left(std::move(l)), right(std::move(r)), length(len) {}
  explicit Node(NodeKind k)
      : kind(k), left(NullTag{}), right(NullTag{}), length(1) {}
  ~Node();
};

inline NodeKind Formula::kind() const { return node_->kind; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline std::uint64_t Formula::length() const { return node_->length; }

// Grammar (whitespace insignificant):
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atom
//   atom    := "a" | "bot" | "top" | "(" formula ")"
// Throws SyntaxError (with byte offset) or UnknownVariable.
Formula parse(std::string_view text);

// Minimal-parenthesis rendering; parse(render(f)) == f.
std::string render(const Formula& f);

inline std::uint64_t length(const Formula& f) { return f.length(); }

// Tree for the class named by idx: psi_1 = a, phi_1 = a -> bot,
// phi_{n+1} = phi_n -> psi_n, psi_{n+1} = phi_n | psi_n. Throws
// SizeLimitExceeded if idx.rank > rank_cap.
Formula rn_formula(RNIndex idx, std::uint32_t rank_cap = kDefaultRankCap);

// Deterministic pseudo-random formula with length(result) <= size.
Formula random_formula(std::uint64_t size, std::uint64_t seed);

// Formula as a graph with shared subterms. Children always refer to nodes
// with a smaller id, so the graph is acyclic by construction.
struct DagNode {
  NodeKind kind;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

class FormulaDag {
 public:
  using Id = std::uint32_t;

  Id add_var();
  Id add_bot();
  Id add(NodeKind kind, Id left, Id right);
  void set_root(Id id);

  const std::vector<DagNode>& nodes() const { return nodes_; }
  const DagNode& node(Id id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  Id root() const;

 private:
  std::vector<DagNode> nodes_;
  Id root_ = 0;
  bool has_root_ = false;
};

// Shared-subterm form of a ladder formula: phi_k and psi_k appear once each.
FormulaDag rn_formula_dag(RNIndex idx);

// Hash-consed graph of f; structurally equal subtrees get one node.
FormulaDag share(const Formula& f);

// Tree denoted by the graph rooted at g.root(). Shared nodes stay shared
// in memory, so this is linear in g.size().
Formula unfold(const FormulaDag& g);

// Text form: one node per line, `<id> := a | bot | and <x> <y> | or <x> <y> |
// impl <x> <y>`, closed by `root <id>`; lines starting with # are ignored. Ids are arbitrary tokens; reading
// renumbers them topologically and rejects cycles and dangling references
// with FormatError.
std::string write_dag(const FormulaDag& g);
FormulaDag read_dag(std::string_view text);

}  // namespace ipc1
