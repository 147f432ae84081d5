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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ipc1/formula.hpp"
#include "ipc1/rn_index.hpp"

namespace ipc1 {

using StateId = std::uint32_t;
using StateSet = boost::dynamic_bitset<std::uint64_t>;
// Row i holds the R-successors of state i.
using Relation = std::vector<StateSet>;
using NamedEdge = std::pair<std::string, std::string>;

enum class Closure { Explicit, ReflexiveTransitive };

// Returns the relation unchanged (Explicit) or its reflexive-transitive
// closure.
Relation saturate(Relation r, Closure mode);

// A finite Kripke model for the one-variable language: states, an
// accessibility relation and the set of states where `a` holds.
//
// Construction only checks that names resolve; the preorder and
// monotonicity conditions are reported by validate().
class KripkeModel {
 public:
  KripkeModel(std::vector<std::string> states, const std::vector<NamedEdge>& edges,
              const std::vector<std::string>& valuation, Closure closure = Closure::Explicit);
  KripkeModel(std::vector<std::string> states, Relation relation, StateSet valuation);

  std::size_t size() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<StateId> find(const std::string& name) const;
  // Throws UnknownState.
  StateId id_of(const std::string& name) const;

  const Relation& relation() const { return relation_; }
  const StateSet& successors(StateId s) const { return relation_.at(s); }
  bool related(StateId from, StateId to) const { return relation_.at(from).test(to); }
  const StateSet& valuation() const { return valuation_; }
  bool holds_a(StateId s) const { return valuation_.test(s); }

 private:
  void index_names();

  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> index_;
  Relation relation_;
  StateSet valuation_;
};

struct Violation {
  enum class Kind { EmptyModel, NotReflexive, NotTransitive, NonMonotoneValuation };
  Kind kind;
  std::string first;   // offending state, or source of the offending pair
  std::string second;  // target of the offending pair, if any

  std::string to_string() const;
};

// Empty iff the relation is a preorder, the valuation is upward closed and
// the model has at least one state.
std::vector<Violation> validate(const KripkeModel& m);

// Throws InvalidModel naming the first violation.
void require_valid(const KripkeModel& m);

// Ladder model H_n: states {1..n-2} u {n}, b sees c iff b == c or b >= c+2,
// `a` true at state 1 except for n == 2 where it is nowhere true.
KripkeModel canonical(std::uint32_t n);

// Quotient of a preorder by mutual accessibility. Clusters are listed so
// that every cluster comes after all clusters strictly above it.
class Condensation {
 public:
  explicit Condensation(const KripkeModel& m);

  std::size_t cluster_count() const { return members_.size(); }
  std::uint32_t cluster_of(StateId s) const { return cluster_of_.at(s); }
  const std::vector<StateId>& members(std::uint32_t c) const { return members_.at(c); }
  // Clusters strictly above c.
  const std::vector<std::uint32_t>& above(std::uint32_t c) const { return above_.at(c); }
  // Number of clusters on the longest strictly ascending chain.
  std::uint32_t depth() const { return depth_; }

 private:
  std::vector<std::uint32_t> cluster_of_;
  std::vector<std::vector<StateId>> members_;
  std::vector<std::vector<std::uint32_t>> above_;
  std::uint32_t depth_ = 0;
};

// Model index h of every state, evaluated bottom-up over the condensation.
// With S the set of indices of clusters strictly above w:
//   h(w) = 1        if a holds at w,
//          2        if 1 is not in S,
//          k + 2    for the unique k >= 1 in S with (k == 1 or k-1 in S)
//                   and k+1 not in S.
// Throws InvalidModel if the model is not valid.
std::vector<std::uint32_t> model_indices(const KripkeModel& m);
std::uint32_t model_index(const KripkeModel& m, StateId w);
std::uint32_t model_index(const KripkeModel& m, const std::string& w);

// Truth of the class idx at a state with model index n:
// psi_k iff n <= k, phi_k iff n < k or n == k+1.
bool satisfied_at_index(RNIndex idx, std::uint32_t n);

struct CheckStats {
  std::uint64_t formula_nodes = 0;  // formula nodes folded or evaluated
  std::uint64_t state_visits = 0;   // (node, state) or per-state h steps
};

// Direct evaluation of the satisfaction clauses over all states, one truth
// set per distinct subformula. Reference oracle for everything else.
bool check_brute(const KripkeModel& m, StateId s, const Formula& f, CheckStats* stats = nullptr);
bool check_brute(const KripkeModel& m, const std::string& s, const Formula& f);
// Truth set of f over all states.
StateSet truth_set(const KripkeModel& m, const Formula& f, CheckStats* stats = nullptr);

// Class index of f matched against the model index of s.
bool check_fast(const KripkeModel& m, StateId s, const Formula& f, CheckStats* stats = nullptr);
bool check_fast(const KripkeModel& m, const std::string& s, const Formula& f);

// Every pair of states has a common successor.
bool is_directed(const KripkeModel& m);

}  // namespace ipc1
