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


#include "ipc1/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "ipc1/error.hpp"
#include "ipc1/lattice.hpp"
#include "ipc1/model_io.hpp"
#include "ipc1/rng.hpp"

namespace ipc1 {

std::size_t SliceGraph::node_count() const {
  std::size_t n = 0;
  for (const auto& s : slices) n += s.size();
  return n;
}

std::string SliceViolation::to_string() const {
  auto pair = [this] { return "(" + first + "," + second + ")"; };
  switch (kind) {
    case Kind::TooFewSlices: return "TooFewSlices";
    case Kind::OddSliceCount: return "OddSliceCount";
    case Kind::EmptySlice: return "EmptySlice(" + first + ")";
    case Kind::DuplicateNode: return "DuplicateNode(" + first + ")";
    case Kind::UnknownNode: return "UnknownNode(" + first + ")";
    case Kind::EdgeNotBetweenAdjacentSlices: return "EdgeNotBetweenAdjacentSlices" + pair();
    case Kind::ZeroOutdegree: return "ZeroOutdegree(" + first + ")";
    case Kind::SourceNotInTopSlice: return "SourceNotInTopSlice(" + first + ")";
    case Kind::TargetNotInBottomSlice: return "TargetNotInBottomSlice(" + first + ")";
  }
  return "?";
}

namespace {

// Node ids follow the slice listing: slice 0 first.
struct Indexed {
  std::vector<std::string> names;
  std::vector<std::uint32_t> slice;
  std::unordered_map<std::string, std::uint32_t> id;
  std::vector<std::vector<std::uint32_t>> succ;

  explicit Indexed(const SliceGraph& g) {
    for (std::uint32_t i = 0; i < g.slices.size(); ++i) {
      for (const auto& v : g.slices[i]) {
        if (id.emplace(v, static_cast<std::uint32_t>(names.size())).second) {
          names.push_back(v);
          slice.push_back(i);
        }
      }
    }
    succ.resize(names.size());
    for (const auto& [u, v] : g.edges) {
      auto iu = id.find(u);
      auto iv = id.find(v);
      if (iu != id.end() && iv != id.end()) succ[iu->second].push_back(iv->second);
    }
    for (auto& s : succ) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }

  std::uint32_t at(const std::string& v) const {
    auto it = id.find(v);
    if (it == id.end()) throw UnknownNode(v);
    return it->second;
  }
};

void require_valid(const SliceGraph& g) {
  const auto violations = validate_slice_graph(g);
  if (!violations.empty()) {
    throw InvalidSliceGraph("invalid slice graph: " + violations.front().to_string());
  }
}

// apath(v, y) for all v; nodes are processed slice by slice from the bottom.
std::vector<bool> apath_values(const Indexed& ix, std::uint32_t y) {
  std::vector<std::uint32_t> order(ix.names.size());
  for (std::uint32_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&ix](std::uint32_t a, std::uint32_t b) { return ix.slice[a] < ix.slice[b]; });
  std::vector<bool> reach(ix.names.size(), false);
  for (std::uint32_t v : order) {
    if (v == y) {
      reach[v] = true;
      continue;
    }
    const auto& succ = ix.succ[v];
    if (succ.empty()) continue;
    const bool existential = ix.slice[v] % 2 == 1;
    reach[v] = existential ? std::any_of(succ.begin(), succ.end(), [&](auto z) { return reach[z]; })
                           : std::all_of(succ.begin(), succ.end(), [&](auto z) { return reach[z]; });
  }
  return reach;
}

}  // namespace

std::vector<SliceViolation> validate_slice_graph(const SliceGraph& g) {
  using K = SliceViolation::Kind;
  std::vector<SliceViolation> out;
  const auto m = g.slice_count();
  if (m < 2) out.push_back({K::TooFewSlices, {}, {}});
  if (m % 2 != 0) out.push_back({K::OddSliceCount, {}, {}});

  std::unordered_map<std::string, std::uint32_t> slice_of;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (g.slices[i].empty()) out.push_back({K::EmptySlice, std::to_string(i), {}});
    for (const auto& v : g.slices[i]) {
      if (!slice_of.emplace(v, i).second) out.push_back({K::DuplicateNode, v, {}});
    }
  }
  std::set<std::string> has_out;
  for (const auto& [u, v] : g.edges) {
    auto iu = slice_of.find(u);
    auto iv = slice_of.find(v);
    if (iu == slice_of.end()) out.push_back({K::UnknownNode, u, {}});
    if (iv == slice_of.end()) out.push_back({K::UnknownNode, v, {}});
    if (iu == slice_of.end() || iv == slice_of.end()) continue;
    if (iu->second != iv->second + 1) {
      out.push_back({K::EdgeNotBetweenAdjacentSlices, u, v});
    }
    has_out.insert(u);
  }
  for (std::uint32_t i = 1; i < m; ++i) {
    for (const auto& v : g.slices[i]) {
      if (!has_out.count(v)) out.push_back({K::ZeroOutdegree, v, {}});
    }
  }
  auto s = slice_of.find(g.s);
  if (s == slice_of.end() || m == 0 || s->second != m - 1) {
    out.push_back({K::SourceNotInTopSlice, g.s, {}});
  }
  auto t = slice_of.find(g.t);
  if (t == slice_of.end() || t->second != 0) out.push_back({K::TargetNotInBottomSlice, g.t, {}});
  return out;
}

bool apath(const SliceGraph& g, const std::string& x, const std::string& y) {
  require_valid(g);
  const Indexed ix(g);
  const auto xi = ix.at(x);
  return apath_values(ix, ix.at(y))[xi];
}

std::map<std::string, bool> apath_to(const SliceGraph& g, const std::string& y) {
  require_valid(g);
  const Indexed ix(g);
  const auto reach = apath_values(ix, ix.at(y));
  std::map<std::string, bool> out;
  for (std::uint32_t v = 0; v < ix.names.size(); ++v) out[ix.names[v]] = reach[v];
  return out;
}

ReducedModel reduce_to_model(const SliceGraph& g) {
  require_valid(g);
  const Indexed ix(g);
  const std::uint32_t m = g.slice_count();
  const std::uint32_t top = 4 * m;

  std::vector<std::string> names;
  auto add = [&names](std::string name) {
    names.push_back(std::move(name));
    return static_cast<StateId>(names.size() - 1);
  };

  // Ladder states 1..4m-2 and 4m; ladder[k] is the id of state k.
  std::vector<StateId> ladder(top + 1, 0);
  for (std::uint32_t k = 1; k <= top; ++k) {
    if (k == top - 1) continue;
    ladder[k] = add(std::to_string(k));
  }
  std::vector<StateId> in_copy(ix.names.size());
  std::vector<StateId> out_copy(ix.names.size());
  for (std::uint32_t v = 0; v < ix.names.size(); ++v) {
    out_copy[v] = add(ReducedModel::out_name(ix.names[v]));
    in_copy[v] = add(ReducedModel::in_name(ix.names[v]));
  }

  // Slices of the layered model: S_out[i] = W_out[i] + {4i+1, 4i+2},
  // S_in[i] = W_in[i] + {4i+3, 4i+4}, except S_in[m-1] = W_in[m-1] + {4m}.
  std::vector<std::vector<StateId>> s_out(m), s_in(m);
  for (std::uint32_t v = 0; v < ix.names.size(); ++v) {
    s_out[ix.slice[v]].push_back(out_copy[v]);
    s_in[ix.slice[v]].push_back(in_copy[v]);
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    s_out[i].push_back(ladder[4 * i + 1]);
    s_out[i].push_back(ladder[4 * i + 2]);
    if (i + 1 < m) {
      s_in[i].push_back(ladder[4 * i + 3]);
      s_in[i].push_back(ladder[4 * i + 4]);
    } else {
      s_in[i].push_back(ladder[top]);
    }
  }

  const std::size_t size = names.size();
  Relation rel(size, StateSet(size));
  auto link = [&rel](StateId from, StateId to) { rel[from].set(to); };

  // E: graph edges u_out -> v_in, and v_in -> v_out.
  for (const auto& [u, v] : g.edges) link(out_copy[ix.at(u)], in_copy[ix.at(v)]);
  for (std::uint32_t v = 0; v < ix.names.size(); ++v) link(in_copy[v], out_copy[v]);

  // H: the ladder's covering edges.
  for (std::uint32_t k = 3; k <= top; ++k) {
    if (k == top - 1) continue;
    link(ladder[k], ladder[k - 2]);
    if (k % 2 == 0) link(ladder[k], ladder[k - 3]);
  }

  // T_in and T_out: ties from copies to the ladder one layer down.
  for (std::uint32_t v = 0; v < ix.names.size(); ++v) {
    const std::uint32_t i = ix.slice[v];
    link(in_copy[v], ladder[4 * i + 2]);
    if (i >= 1) link(out_copy[v], ladder[4 * i - 1]);
  }

  // P: every pair that jumps over at least one layer.
  for (std::uint32_t i = m - 1; i >= 1; --i) {
    for (StateId x : s_in[i]) {
      for (std::uint32_t j = 0; j < i; ++j) {
        for (StateId y : s_in[j]) link(x, y);
        for (StateId y : s_out[j]) link(x, y);
      }
    }
    for (StateId x : s_out[i]) {
      for (StateId y : s_out[i - 1]) link(x, y);
      for (std::uint32_t j = 0; j + 2 <= i; ++j) {
        for (StateId y : s_in[j]) link(x, y);
        for (StateId y : s_out[j]) link(x, y);
      }
    }
  }

  // T: loops.
  for (StateId x = 0; x < size; ++x) link(x, x);

  StateSet val(size);
  val.set(out_copy[ix.at(g.t)]);
  val.set(ladder[1]);

  ReducedModel out{KripkeModel(std::move(names), std::move(rel), std::move(val)),
                   ReducedModel::out_name(g.s), m, ix.names.size()};
  const auto violations = validate(out.model);
  if (!violations.empty()) {
    throw std::logic_error("reduce_to_model built an invalid model: " +
                           violations.front().to_string());
  }
  return out;
}

std::uint32_t separating_rank(std::uint32_t slices) { return 4 * slices - 3; }

McInstance mc_instance(const SliceGraph& g, std::uint32_t rank_cap) {
  ReducedModel r = reduce_to_model(g);
  const RNIndex idx = RNIndex::phi(separating_rank(r.slices));
  Formula f = rn_formula(idx, rank_cap);
  return {std::move(f), idx, std::move(r.model), std::move(r.start)};
}

bool ReductionReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const ReportEntry& e) {
    return e.status == ReportEntry::Status::Fail;
  });
}

std::string ReductionReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    const char* tag = "INFO";
    switch (e.status) {
      case ReportEntry::Status::Pass: tag = "PASS"; break;
      case ReportEntry::Status::Fail: tag = "FAIL"; break;
      case ReportEntry::Status::NotApplicable: tag = "N/A "; break;
      case ReportEntry::Status::Info: break;
    }
    os << tag << "  " << e.check << ": " << e.detail << "\n";
  }
  return os.str();
}

ReductionReport verify_reduction(const SliceGraph& g, std::uint32_t rank_cap) {
  using Status = ReportEntry::Status;
  ReductionReport report;
  auto add = [&report](std::string check, bool pass, std::string detail) {
    report.entries.push_back(
        {std::move(check), pass ? Status::Pass : Status::Fail, std::move(detail)});
  };

  const ReducedModel r = reduce_to_model(g);
  const KripkeModel& model = r.model;
  const std::uint32_t m = r.slices;
  const std::size_t n = r.graph_nodes;
  report.states = model.size();

  const auto violations = validate(model);
  add("model-valid", violations.empty(),
      violations.empty() ? "preorder with monotone valuation" : violations.front().to_string());

  add("state-count", model.size() == 2 * n + 4 * m - 1,
      "|U| = " + std::to_string(model.size()) + ", expected 2n+4m-1 = " +
          std::to_string(2 * n + 4 * m - 1));

  const std::string bound = "|U| = " + std::to_string(model.size()) +
                            ", 4n = " + std::to_string(4 * n);
  if (n >= 2 * static_cast<std::size_t>(m)) {
    add("size-bound", model.size() <= 4 * n, bound);
  } else {
    report.entries.push_back({"size-bound", Status::NotApplicable,
                              bound + " (the bound needs n >= 2m; here n=" +
                                  std::to_string(n) + ", m=" + std::to_string(m) + ")"});
  }

  const Condensation cond(model);
  report.depth = cond.depth();
  add("depth", cond.depth() == 2 * m,
      "longest chain " + std::to_string(cond.depth()) + " clusters, 2m = " +
          std::to_string(2 * m));

  // Embedded ladder versus canonical(4m), matched by name.
  {
    const KripkeModel h = canonical(4 * m);
    bool same = true;
    for (StateId x = 0; x < h.size() && same; ++x) {
      const auto mx = model.find(h.name(x));
      if (!mx || model.holds_a(*mx) != h.holds_a(x)) {
        same = false;
        break;
      }
      for (StateId y = 0; y < h.size(); ++y) {
        const auto my = model.find(h.name(y));
        if (!my || model.related(*mx, *my) != h.related(x, y)) {
          same = false;
          break;
        }
      }
    }
    add("ladder", same, "states 1..4m-2,4m induce canonical(" + std::to_string(4 * m) + ")");
  }

  const auto h = model_indices(model);
  {
    bool ok = true;
    std::string bad;
    for (std::uint32_t k = 1; k <= 4 * m; ++k) {
      if (k == 4 * m - 1) continue;
      const auto hk = h[model.id_of(std::to_string(k))];
      if (hk != k) {
        ok = false;
        bad = "state " + std::to_string(k) + " has index " + std::to_string(hk);
        break;
      }
    }
    add("ladder-indices", ok, ok ? "every ladder state k has index k" : bad);
  }

  const auto reach = apath_to(g, g.t);
  report.path = reach.at(g.s);
  {
    bool range_ok = true, path_ok = true;
    std::string range_bad, path_bad;
    for (std::uint32_t i = 0; i < m; ++i) {
      for (const auto& v : g.slices[i]) {
        const auto h_out = h[model.id_of(ReducedModel::out_name(v))];
        const auto h_in = h[model.id_of(ReducedModel::in_name(v))];
        if (range_ok && !((h_out == 4 * i + 1 || h_out == 4 * i + 2) &&
                          (h_in == 4 * i + 2 || h_in == 4 * i + 4))) {
          range_ok = false;
          range_bad = v + ": out " + std::to_string(h_out) + ", in " + std::to_string(h_in);
        }
        const bool universal = i % 2 == 0;
        const bool by_out = h_out == (universal ? 4 * i + 1 : 4 * i + 2);
        const bool by_in = h_in == (universal ? 4 * i + 4 : 4 * i + 2);
        if (path_ok && (by_out != reach.at(v) || by_in != reach.at(v))) {
          path_ok = false;
          path_bad = v + ": apath " + (reach.at(v) ? "true" : "false") + ", out " +
                     std::to_string(h_out) + ", in " + std::to_string(h_in);
        }
      }
    }
    add("index-range", range_ok,
        range_ok ? "h(v_out) in {4i+1,4i+2}, h(v_in) in {4i+2,4i+4}" : range_bad);
    add("index-path", path_ok,
        path_ok ? "apath(v,t) matches the slice-parity index of both copies" : path_bad);
  }

  const std::uint32_t hs = h[model.id_of(r.start)];
  report.start_index = hs;
  add("parity", (hs % 2 == 0) == report.path,
      "h(s_out) = " + std::to_string(hs) + ", apath(s,t) = " + (report.path ? "true" : "false"));
  add("start-range", hs == 4 * m - 3 || hs == 4 * m - 2,
      "h(s_out) in {4(m-1)+1, 4(m-1)+2} = {" + std::to_string(4 * m - 3) + "," +
          std::to_string(4 * m - 2) + "}");

  // Candidate psi ranks for the model-checking formula; neither separates
  // the two possible start indices, which is why phi_{4m-3} is used.
  for (std::uint32_t rank : {4 * m + 2, 4 * m - 2}) {
    const bool holds = satisfied_at_index(RNIndex::psi(rank), hs);
    report.entries.push_back({"candidate psi" + std::to_string(rank), Status::Info,
                              std::string("holds at h(s_out): ") + (holds ? "true" : "false") +
                                  " (apath " + (report.path ? "true" : "false") + ")"});
  }

  if (separating_rank(m) <= rank_cap) {
    const McInstance inst = mc_instance(g, rank_cap);
    const StateId s = inst.model.id_of(inst.state);
    const bool fast = check_fast(inst.model, s, inst.formula);
    const bool brute = check_brute(inst.model, s, inst.formula);
    add("model-check", fast == report.path && brute == report.path,
        to_string(inst.index) + " at s_out: fast " + (fast ? "true" : "false") + ", brute " +
            (brute ? "true" : "false"));
  } else {
    report.entries.push_back({"model-check", Status::NotApplicable,
                              "rank " + std::to_string(separating_rank(m)) + " exceeds cap"});
  }
  return report;
}

SliceGraph gen_slice_graph(std::uint32_t slices, std::uint32_t width, double density,
                           std::uint64_t seed) {
  if (slices < 2 || slices % 2 != 0) {
    throw BadParameters("slice count must be even and at least 2");
  }
  if (width < 1) throw BadParameters("width must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) throw BadParameters("density must lie in [0, 1]");

  detail::Rng rng(seed);
  SliceGraph g;
  g.slices.resize(slices);
  for (std::uint32_t i = 0; i < slices; ++i) {
    for (std::uint32_t j = 0; j < width; ++j) {
      g.slices[i].push_back("v" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  for (std::uint32_t i = 1; i < slices; ++i) {
    for (const auto& u : g.slices[i]) {
      bool any = false;
      for (const auto& v : g.slices[i - 1]) {
        if (rng.chance(density)) {
          g.edges.emplace_back(u, v);
          any = true;
        }
      }
      if (!any) g.edges.emplace_back(u, g.slices[i - 1][rng.below(width)]);
    }
  }
  g.s = g.slices[slices - 1][rng.below(width)];
  g.t = g.slices[0][rng.below(width)];
  return g;
}

namespace {

using nlohmann::json;

std::string node_name(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw FormatError("node names must be strings or integers, got " + v.dump());
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_graph_body(std::ostringstream& os, const SliceGraph& g, const std::string& prefix,
                     const std::string& indent) {
  for (std::uint32_t i = g.slice_count(); i-- > 0;) {
    os << indent << "{ rank=same;";
    for (const auto& v : g.slices[i]) os << ' ' << quoted(prefix + v) << ';';
    os << " }\n";
    for (const auto& v : g.slices[i]) {
      const bool mark = v == g.s || v == g.t;
      os << indent << quoted(prefix + v) << " [label=" << quoted(v)
         << ", shape=" << (i % 2 == 1 ? "diamond" : "box") << (mark ? ", peripheries=2" : "")
         << "];\n";
    }
  }
  for (const auto& [u, v] : g.edges) {
    os << indent << quoted(prefix + u) << " -> " << quoted(prefix + v) << ";\n";
  }
}

}  // namespace

SliceGraph load_slice_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("slice graph file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("slices") || !doc["slices"].is_array()) {
    throw FormatError("slice graph file: expected an object with a \"slices\" array");
  }
  SliceGraph g;
  for (const auto& slice : doc["slices"]) {
    if (!slice.is_array()) throw FormatError("slice graph file: each slice must be an array");
    auto& out = g.slices.emplace_back();
    for (const auto& v : slice) out.push_back(node_name(v));
  }
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw FormatError("slice graph file: each edge must be a pair, got " + e.dump());
      }
      g.edges.emplace_back(node_name(e[0]), node_name(e[1]));
    }
  }
  if (!doc.contains("s") || !doc.contains("t")) {
    throw FormatError("slice graph file: \"s\" and \"t\" are required");
  }
  g.s = node_name(doc["s"]);
  g.t = node_name(doc["t"]);
  return g;
}

SliceGraph load_slice_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open slice graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_slice_graph(buf.str());
}

std::string slice_graph_to_json(const SliceGraph& g) {
  json doc;
  doc["slices"] = g.slices;
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["s"] = g.s;
  doc["t"] = g.t;
  return doc.dump() + "\n";
}

std::string slice_graph_to_dot(const SliceGraph& g) {
  std::ostringstream os;
  os << "digraph slice_graph {\n";
  emit_graph_body(os, g, "", "  ");
  os << "}\n";
  return os.str();
}

std::string reduction_to_dot(const SliceGraph& g) {
  const ReducedModel r = reduce_to_model(g);
  const auto h = model_indices(r.model);
  std::ostringstream os;
  os << "digraph reduction {\n  newrank=true;\n";
  os << "  subgraph cluster_graph {\n    label=\"slice graph\";\n";
  emit_graph_body(os, g, "G:", "    ");
  os << "  }\n";
  os << "  subgraph cluster_model {\n    label=\"model\";\n";
  for (StateId u = 0; u < r.model.size(); ++u) {
    os << "    " << quoted("M:" + r.model.name(u))
       << " [label=" << quoted(r.model.name(u) + "\\n" + std::to_string(h[u]))
       << ", shape=" << (r.model.holds_a(u) ? "doublecircle" : "circle") << "];\n";
  }
  for (auto [u, v] : covering_pairs(r.model)) {
    os << "    " << quoted("M:" + r.model.name(u)) << " -> " << quoted("M:" + r.model.name(v))
       << ";\n";
  }
  os << "  }\n}\n";
  return os.str();
}

}  // namespace ipc1
