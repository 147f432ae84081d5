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


#include "ipc1/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ipc1/error.hpp"
#include "ipc1/lattice.hpp"

namespace ipc1 {

Relation saturate(Relation r, Closure mode) {
  if (mode == Closure::Explicit) return r;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i].set(i);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i].test(k)) r[i] |= r[k];
    }
  }
  return r;
}

KripkeModel::KripkeModel(std::vector<std::string> states, const std::vector<NamedEdge>& edges,
                         const std::vector<std::string>& valuation, Closure closure)
    : names_(std::move(states)) {
  index_names();
  const std::size_t n = names_.size();
  relation_.assign(n, StateSet(n));
  for (const auto& [from, to] : edges) relation_[id_of(from)].set(id_of(to));
  relation_ = saturate(std::move(relation_), closure);
  valuation_.resize(n);
  for (const auto& s : valuation) valuation_.set(id_of(s));
}

KripkeModel::KripkeModel(std::vector<std::string> states, Relation relation, StateSet valuation)
    : names_(std::move(states)), relation_(std::move(relation)), valuation_(std::move(valuation)) {
  index_names();
  const std::size_t n = names_.size();
  if (relation_.size() != n || valuation_.size() != n ||
      std::any_of(relation_.begin(), relation_.end(),
                  [n](const StateSet& row) { return row.size() != n; })) {
    throw std::invalid_argument("KripkeModel: relation/valuation size mismatch");
  }
}

void KripkeModel::index_names() {
  index_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<StateId>(i)).second) {
      throw FormatError("duplicate state '" + names_[i] + "'");
    }
  }
}

std::optional<StateId> KripkeModel::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId KripkeModel::id_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownState(name);
  return it->second;
}

std::string Violation::to_string() const {
  switch (kind) {
    case Kind::EmptyModel: return "EmptyModel";
    case Kind::NotReflexive: return "NotReflexive(" + first + ")";
    case Kind::NotTransitive: return "NotTransitive(" + first + "," + second + ")";
    case Kind::NonMonotoneValuation: return "NonMonotoneValuation(" + first + "," + second + ")";
  }
  return "?";
}

std::vector<Violation> validate(const KripkeModel& m) {
  std::vector<Violation> out;
  const std::size_t n = m.size();
  if (n == 0) {
    out.push_back({Violation::Kind::EmptyModel, {}, {}});
    return out;
  }
  for (StateId i = 0; i < n; ++i) {
    if (!m.related(i, i)) out.push_back({Violation::Kind::NotReflexive, m.name(i), {}});
  }
  // Transitivity: succ(j) must be contained in succ(i) for every j in succ(i).
  for (StateId i = 0; i < n; ++i) {
    const StateSet& row = m.successors(i);
    for (auto j = row.find_first(); j != StateSet::npos; j = row.find_next(j)) {
      if (m.successors(j).is_subset_of(row)) continue;
      const StateSet missing = m.successors(j) - row;
      for (auto k = missing.find_first(); k != StateSet::npos; k = missing.find_next(k)) {
        out.push_back({Violation::Kind::NotTransitive, m.name(i), m.name(k)});
      }
    }
  }
  for (StateId i = 0; i < n; ++i) {
    if (!m.holds_a(i)) continue;
    const StateSet off = m.successors(i) - m.valuation();
    for (auto j = off.find_first(); j != StateSet::npos; j = off.find_next(j)) {
      out.push_back({Violation::Kind::NonMonotoneValuation, m.name(i), m.name(j)});
    }
  }
  // A pair missing via several intermediate states is reported once.
  std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.kind, x.first, x.second) < std::tie(y.kind, y.first, y.second);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Violation& x, const Violation& y) {
                          return x.kind == y.kind && x.first == y.first && x.second == y.second;
                        }),
            out.end());
  return out;
}

void require_valid(const KripkeModel& m) {
  const auto violations = validate(m);
  if (!violations.empty()) {
    throw InvalidModel("invalid model: " + violations.front().to_string() +
                       (violations.size() > 1
                            ? " (+" + std::to_string(violations.size() - 1) + " more)"
                            : std::string()));
  }
}

KripkeModel canonical(std::uint32_t n) {
  if (n == 0) throw BadParameters("canonical models are indexed from 1");
  std::vector<std::uint32_t> labels;
  for (std::uint32_t b = 1; b + 2 <= n; ++b) labels.push_back(b);
  labels.push_back(n);

  const std::size_t size = labels.size();
  std::vector<std::string> names;
  Relation rel(size, StateSet(size));
  StateSet val(size);
  for (std::size_t i = 0; i < size; ++i) {
    names.push_back(std::to_string(labels[i]));
    for (std::size_t j = 0; j < size; ++j) {
      if (labels[i] == labels[j] || labels[i] >= labels[j] + 2) rel[i].set(j);
    }
    if (labels[i] == 1 && n != 2) val.set(i);
  }
  return KripkeModel(std::move(names), std::move(rel), std::move(val));
}

Condensation::Condensation(const KripkeModel& m) {
  const std::size_t n = m.size();
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  cluster_of_.assign(n, kNone);

  // In a preorder, a state strictly above w has a strictly smaller up-set,
  // so ascending up-set size is a valid evaluation order.
  std::vector<StateId> by_upset(n);
  std::iota(by_upset.begin(), by_upset.end(), 0);
  std::stable_sort(by_upset.begin(), by_upset.end(), [&m](StateId x, StateId y) {
    return m.successors(x).count() < m.successors(y).count();
  });

  for (StateId w : by_upset) {
    if (cluster_of_[w] != kNone) continue;
    const auto c = static_cast<std::uint32_t>(members_.size());
    members_.emplace_back();
    const StateSet& up = m.successors(w);
    for (auto v = up.find_first(); v != StateSet::npos; v = up.find_next(v)) {
      if (m.related(v, w)) {
        cluster_of_[v] = c;
        members_[c].push_back(static_cast<StateId>(v));
      }
    }
    std::sort(members_[c].begin(), members_[c].end());
  }

  above_.resize(members_.size());
  std::vector<std::uint32_t> height(members_.size(), 1);
  for (std::uint32_t c = 0; c < members_.size(); ++c) {
    const StateSet& up = m.successors(members_[c].front());
    std::vector<bool> seen(members_.size(), false);
    for (auto v = up.find_first(); v != StateSet::npos; v = up.find_next(v)) {
      const auto d = cluster_of_[v];
      if (d == c || seen[d]) continue;
      seen[d] = true;
      above_[c].push_back(d);
      height[c] = std::max(height[c], height[d] + 1);
    }
    depth_ = std::max(depth_, height[c]);
  }
}

std::vector<std::uint32_t> model_indices(const KripkeModel& m) {
  require_valid(m);
  const Condensation cond(m);
  const std::size_t n = m.size();
  std::vector<std::uint32_t> h_cluster(cond.cluster_count(), 0);

  for (std::uint32_t c = 0; c < cond.cluster_count(); ++c) {
    const StateId w = cond.members(c).front();
    if (m.holds_a(w)) {
      h_cluster[c] = 1;
      continue;
    }
    // Indices never exceed |U| + 1.
    std::vector<bool> seen(n + 3, false);
    for (auto d : cond.above(c)) seen[h_cluster[d]] = true;
    if (!seen[1]) {
      h_cluster[c] = 2;
      continue;
    }
    std::uint32_t chosen = 0;
    int candidates = 0;
    for (std::uint32_t k = 1; k + 1 < seen.size(); ++k) {
      if (seen[k] && (k == 1 || seen[k - 1]) && !seen[k + 1]) {
        chosen = k;
        ++candidates;
      }
    }
    if (candidates != 1) {
      throw InvalidModel("model index undefined at state '" + m.name(w) + "'");
    }
    h_cluster[c] = chosen + 2;
  }

  std::vector<std::uint32_t> h(n);
  for (StateId s = 0; s < n; ++s) h[s] = h_cluster[cond.cluster_of(s)];
  return h;
}

std::uint32_t model_index(const KripkeModel& m, StateId w) {
  if (w >= m.size()) throw UnknownState(std::to_string(w));
  return model_indices(m)[w];
}

std::uint32_t model_index(const KripkeModel& m, const std::string& w) {
  return model_index(m, m.id_of(w));
}

bool satisfied_at_index(RNIndex idx, std::uint32_t n) {
  switch (idx.kind) {
    case RNKind::Bot: return false;
    case RNKind::Top: return true;
    case RNKind::Psi: return n <= idx.rank;
    case RNKind::Phi: return n < idx.rank || n == idx.rank + 1;
  }
  return false;
}

StateSet truth_set(const KripkeModel& m, const Formula& f, CheckStats* stats) {
  require_valid(m);
  const FormulaDag g = share(f);
  const std::size_t n = m.size();
  std::vector<StateSet> sat;
  sat.reserve(g.size());
  for (const DagNode& node : g.nodes()) {
    switch (node.kind) {
      case NodeKind::Var: sat.push_back(m.valuation()); break;
      case NodeKind::Bot: sat.emplace_back(n); break;
      case NodeKind::And: sat.push_back(sat[node.left] & sat[node.right]); break;
      case NodeKind::Or: sat.push_back(sat[node.left] | sat[node.right]); break;
      case NodeKind::Impl: {
        // s |= l -> r  iff  no successor of s satisfies l but not r.
        const StateSet counter = sat[node.left] - sat[node.right];
        StateSet out(n);
        for (StateId s = 0; s < n; ++s) {
          if (!m.successors(s).intersects(counter)) out.set(s);
        }
        sat.push_back(std::move(out));
        break;
      }
    }
    if (stats) {
      ++stats->formula_nodes;
      stats->state_visits += n;
    }
  }
  return sat.at(g.root());
}

bool check_brute(const KripkeModel& m, StateId s, const Formula& f, CheckStats* stats) {
  if (s >= m.size()) throw UnknownState(std::to_string(s));
  return truth_set(m, f, stats).test(s);
}

bool check_brute(const KripkeModel& m, const std::string& s, const Formula& f) {
  return check_brute(m, m.id_of(s), f);
}

bool check_fast(const KripkeModel& m, StateId s, const Formula& f, CheckStats* stats) {
  if (s >= m.size()) throw UnknownState(std::to_string(s));
  const RNIndex idx = rn_index(f, stats ? &stats->formula_nodes : nullptr);
  if (idx.is_bot() || idx.is_top()) {
    require_valid(m);
    return idx.is_top();
  }
  const auto h = model_indices(m);
  if (stats) stats->state_visits += m.size();
  return satisfied_at_index(idx, h[s]);
}

bool check_fast(const KripkeModel& m, const std::string& s, const Formula& f) {
  return check_fast(m, m.id_of(s), f);
}

bool is_directed(const KripkeModel& m) {
  const std::size_t n = m.size();
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = u + 1; v < n; ++v) {
      if (!m.successors(u).intersects(m.successors(v))) return false;
    }
  }
  return true;
}

}  // namespace ipc1
