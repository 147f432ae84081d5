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
#include <string>
#include <string_view>
#include <vector>

#include "ipc1/kripke.hpp"

namespace ipc1 {

// Model files:
//   {"states": [...], "edges": [[u, v], ...], "valuation": [...],
//    "closure": "explicit" | "reflexive-transitive"}
// State names may be strings or integers; "closure" defaults to "explicit".
// Throws FormatError on malformed documents, UnknownState on dangling names.
KripkeModel load_model(std::string_view json_text);
KripkeModel load_model_file(const std::string& path);

// Writes every pair of the relation with closure "explicit".
std::string model_to_json(const KripkeModel& m);

struct DotOptions {
  // Drop loops and pairs implied by transitivity.
  bool hide_implied = true;
  // Optional per-state annotation (e.g. model indices), printed under names.
  std::vector<std::uint32_t> labels;
  std::string graph_name = "model";
};

// States of the valuation are drawn as double circles.
std::string model_to_dot(const KripkeModel& m, const DotOptions& options = {});

// Plain listing: one line per state with its successors and valuation mark.
std::string model_to_text(const KripkeModel& m);

// Pairs kept by DotOptions::hide_implied: (u, v) with u != v such that no
// third state w outside the clusters of u and v has u R w R v.
std::vector<std::pair<StateId, StateId>> covering_pairs(const KripkeModel& m);

}  // namespace ipc1
