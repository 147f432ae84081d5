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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipc1/formula.hpp"
#include "ipc1/kripke.hpp"

namespace ipc1 {

// Layered alternating graph. slices[0] is the bottom slice; odd slices are
// existential, even slices universal, and every edge goes from slice i to
// slice i-1. The start s sits in the (existential) top slice, the target t
// in slice 0.
struct SliceGraph {
  std::vector<std::vector<std::string>> slices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string s;
  std::string t;

  std::size_t node_count() const;
  std::uint32_t slice_count() const { return static_cast<std::uint32_t>(slices.size()); }
};

struct SliceViolation {
  enum class Kind {
    TooFewSlices,
    OddSliceCount,
    EmptySlice,
    DuplicateNode,
    UnknownNode,
    EdgeNotBetweenAdjacentSlices,
    ZeroOutdegree,
    SourceNotInTopSlice,
    TargetNotInBottomSlice,
  };
  Kind kind;
  std::string first;
  std::string second;

  std::string to_string() const;
};

std::vector<SliceViolation> validate_slice_graph(const SliceGraph& g);

// Alternating reachability of y from x: x == y, or x existential with some
// successor reaching y, or x universal with at least one successor and all
// successors reaching y. A sink other than y reaches nothing.
// Throws UnknownNode, InvalidSliceGraph.
bool apath(const SliceGraph& g, const std::string& x, const std::string& y);
// apath(v, y) for every node v.
std::map<std::string, bool> apath_to(const SliceGraph& g, const std::string& y);

// Kripke model built from a slice graph: an in- and an out-copy of every
// node (named "<v>_in", "<v>_out") interleaved with the ladder model on
// states 1..4m-2, 4m (named by their numbers), with valuation {t_out, 1}.
struct ReducedModel {
  KripkeModel model;
  std::string start;  // s_out
  std::uint32_t slices = 0;
  std::size_t graph_nodes = 0;

  static std::string in_name(const std::string& v) { return v + "_in"; }
  static std::string out_name(const std::string& v) { return v + "_out"; }
};

// Throws InvalidSliceGraph. The relation is the union of the copy edges,
// ladder edges, the two kinds of tie edges to the ladder, all pairs that
// skip a layer and the loops; it is checked to be a valid model afterwards
// (std::logic_error otherwise).
ReducedModel reduce_to_model(const SliceGraph& g);

// With m slices the start state has model index 4m-3 (no alternating path)
// or 4m-2 (path). phi_{4m-3} is the ladder formula that holds exactly at
// the second of the two.
std::uint32_t separating_rank(std::uint32_t slices);

struct McInstance {
  Formula formula;
  RNIndex index;
  KripkeModel model;
  std::string state;
};

// (phi_{4m-3}, reduced model, s_out): the model check succeeds iff
// apath(s, t). Throws SizeLimitExceeded when 4m-3 exceeds rank_cap.
McInstance mc_instance(const SliceGraph& g, std::uint32_t rank_cap = kDefaultRankCap);

struct ReportEntry {
  enum class Status { Pass, Fail, NotApplicable, Info };
  std::string check;
  Status status;
  std::string detail;
};

struct ReductionReport {
  std::vector<ReportEntry> entries;
  bool path = false;                // apath(s, t)
  std::uint32_t start_index = 0;    // h(s_out)
  std::size_t states = 0;
  std::uint32_t depth = 0;

  bool ok() const;
  std::string to_string() const;
};

// Executable form of the construction's correctness properties: model
// validity, state count, depth, the embedded ladder, the per-node range and
// path characterisation of model indices, parity of the start index, and
// agreement of both checkers on the model-checking instance.
ReductionReport verify_reduction(const SliceGraph& g, std::uint32_t rank_cap = kDefaultRankCap);

// Random valid slice graph with `slices` (even, >= 2) slices of `width`
// nodes. Each possible edge is drawn with probability density and every
// node above slice 0 keeps at least one edge. Nodes are named v<i>_<j>.
// Throws BadParameters.
SliceGraph gen_slice_graph(std::uint32_t slices, std::uint32_t width, double density,
                           std::uint64_t seed);

// {"slices": [[V0...], [V1...], ...], "edges": [[u, v], ...], "s": .., "t": ..}
SliceGraph load_slice_graph(std::string_view json_text);
SliceGraph load_slice_graph_file(const std::string& path);
std::string slice_graph_to_json(const SliceGraph& g);
std::string slice_graph_to_dot(const SliceGraph& g);
// Graph on the left, reduced model (with model indices) on the right.
std::string reduction_to_dot(const SliceGraph& g);

}  // namespace ipc1
