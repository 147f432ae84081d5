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
#include <string_view>
#include <vector>

#include "ipc1/formula.hpp"
#include "ipc1/kripke.hpp"
#include "ipc1/rn_index.hpp"

namespace ipc1 {

// Set of model indices admitted by a logic: everything, or a finite list.
struct IndexSet {
  bool all = true;
  std::vector<std::uint32_t> members;  // ascending; empty when all

  bool contains(std::uint32_t n) const;
  std::string to_string() const;
};

// A one-variable superintuitionistic logic, given by a single axiom class
// (none for IPC). Semantically it is determined by the model indices at
// which the axiom holds.
class Logic {
 public:
  static Logic ipc();
  static Logic kc();  // axiom ~a | ~~a, i.e. psi3
  // Throws AxiomIsBot for bot; a top axiom gives IPC.
  static Logic with_axiom(RNIndex axiom);
  // "ipc", "kc", "psi:<k>", "phi:<k>". Throws FormatError.
  static Logic parse(std::string_view text);

  const std::optional<RNIndex>& axiom() const { return axiom_; }
  const IndexSet& allowed() const { return allowed_; }
  bool is_kc() const { return axiom_ && *axiom_ == RNIndex::psi(3); }
  std::string name() const;

 private:
  Logic(std::optional<RNIndex> axiom, IndexSet allowed)
      : axiom_(axiom), allowed_(std::move(allowed)) {}

  std::optional<RNIndex> axiom_;
  IndexSet allowed_;
};

// {1..k} for psi_k, {1..k-1} u {k+1} for phi_k, everything for IPC.
IndexSet allowed_indices(const Logic& logic);

// Every state's model index lies in the allowed set. For KC the result is
// cross-checked against is_directed: a directed model that is reported
// inadmissible throws std::logic_error. The converse does not hold in
// general (the valuation matters, not only the frame).
bool admissible(const Logic& logic, const KripkeModel& m);

// f holds at every admitted model index.
bool is_valid_in(const Logic& logic, const Formula& f);

struct EquivalenceClass {
  std::vector<bool> pattern;     // truth at each allowed index, ascending
  std::vector<RNIndex> members;  // indices of rank <= max + 2, plus bot/top
  RNIndex representative;        // least rank, psi before phi on ties
};

// Classes of formulas modulo a logic with finitely many allowed indices.
// Patterns are computed from the model-index characterisation and then
// re-checked by brute force on the canonical models of the allowed
// indices; a mismatch throws std::logic_error. Throws BadParameters for
// logics with infinitely many indices.
std::vector<EquivalenceClass> classes(const Logic& logic);

// One line per class: pattern bits, representative, members.
std::string classes_table(const Logic& logic, const std::vector<EquivalenceClass>& cls);

// Satisfaction on a model admitted by the logic. Throws InadmissibleModel.
bool check_in(const Logic& logic, const KripkeModel& m, StateId s, const Formula& f);

}  // namespace ipc1
