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


#include "ipc1/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ipc1/error.hpp"

namespace ipc1 {

using nlohmann::json;

namespace {

std::string state_name(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw FormatError("state names must be strings or integers, got " + v.dump());
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

KripkeModel load_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("model file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("states") || !doc["states"].is_array()) {
    throw FormatError("model file: expected an object with a \"states\" array");
  }
  std::vector<std::string> states;
  for (const auto& s : doc["states"]) states.push_back(state_name(s));

  std::vector<NamedEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw FormatError("model file: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw FormatError("model file: each edge must be a pair, got " + e.dump());
      }
      edges.emplace_back(state_name(e[0]), state_name(e[1]));
    }
  }
  std::vector<std::string> valuation;
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_array()) {
      throw FormatError("model file: \"valuation\" must be an array");
    }
    for (const auto& s : doc["valuation"]) valuation.push_back(state_name(s));
  }
  Closure closure = Closure::Explicit;
  if (doc.contains("closure")) {
    const auto mode = doc["closure"].is_string() ? doc["closure"].get<std::string>() : "";
    if (mode == "reflexive-transitive") {
      closure = Closure::ReflexiveTransitive;
    } else if (mode != "explicit") {
      throw FormatError("model file: unknown closure " + doc["closure"].dump());
    }
  }
  return KripkeModel(std::move(states), edges, valuation, closure);
}

KripkeModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string model_to_json(const KripkeModel& m) {
  json doc;
  doc["states"] = m.names();
  json edges = json::array();
  for (StateId u = 0; u < m.size(); ++u) {
    const StateSet& row = m.successors(u);
    for (auto v = row.find_first(); v != StateSet::npos; v = row.find_next(v)) {
      edges.push_back({m.name(u), m.name(static_cast<StateId>(v))});
    }
  }
  doc["edges"] = std::move(edges);
  json val = json::array();
  for (StateId u = 0; u < m.size(); ++u) {
    if (m.holds_a(u)) val.push_back(m.name(u));
  }
  doc["valuation"] = std::move(val);
  doc["closure"] = "explicit";
  return doc.dump() + "\n";
}

std::vector<std::pair<StateId, StateId>> covering_pairs(const KripkeModel& m) {
  const std::size_t n = m.size();
  auto mutual = [&m](StateId x, StateId y) { return m.related(x, y) && m.related(y, x); };
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId u = 0; u < n; ++u) {
    const StateSet& row = m.successors(u);
    for (auto vv = row.find_first(); vv != StateSet::npos; vv = row.find_next(vv)) {
      const auto v = static_cast<StateId>(vv);
      if (u == v) continue;
      bool implied = false;
      for (auto ww = row.find_first(); ww != StateSet::npos && !implied; ww = row.find_next(ww)) {
        const auto w = static_cast<StateId>(ww);
        if (w == u || w == v || mutual(w, u) || mutual(w, v)) continue;
        implied = m.related(w, v);
      }
      if (!implied) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string model_to_dot(const KripkeModel& m, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << quoted(options.graph_name) << " {\n";
  os << "  rankdir=BT;\n";
  for (StateId u = 0; u < m.size(); ++u) {
    std::string label = m.name(u);
    if (u < options.labels.size()) label += "\\nh=" + std::to_string(options.labels[u]);
    os << "  " << quoted(m.name(u)) << " [label=" << quoted(label)
       << ", shape=" << (m.holds_a(u) ? "doublecircle" : "circle") << "];\n";
  }
  if (options.hide_implied) {
    for (auto [u, v] : covering_pairs(m)) {
      os << "  " << quoted(m.name(u)) << " -> " << quoted(m.name(v)) << ";\n";
    }
  } else {
    for (StateId u = 0; u < m.size(); ++u) {
      const StateSet& row = m.successors(u);
      for (auto v = row.find_first(); v != StateSet::npos; v = row.find_next(v)) {
        os << "  " << quoted(m.name(u)) << " -> " << quoted(m.name(static_cast<StateId>(v)))
           << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string model_to_text(const KripkeModel& m) {
  std::ostringstream os;
  for (StateId u = 0; u < m.size(); ++u) {
    os << m.name(u) << (m.holds_a(u) ? " [a]" : "") << " ->";
    const StateSet& row = m.successors(u);
    for (auto v = row.find_first(); v != StateSet::npos; v = row.find_next(v)) {
      os << ' ' << m.name(static_cast<StateId>(v));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ipc1
