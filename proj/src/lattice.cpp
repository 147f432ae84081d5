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


#include "ipc1/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ipc1/error.hpp"

namespace ipc1 {

RNIndex RNIndex::phi(std::uint32_t n) {
  if (n == 0) throw BadParameters("phi index needs rank >= 1");
  return {RNKind::Phi, n};
}

RNIndex RNIndex::psi(std::uint32_t n) {
  if (n == 0) throw BadParameters("psi index needs rank >= 1");
  return {RNKind::Psi, n};
}

std::string to_string(RNIndex idx) {
  switch (idx.kind) {
    case RNKind::Bot: return "bot";
    case RNKind::Top: return "top";
    case RNKind::Phi: return "phi" + std::to_string(idx.rank);
    case RNKind::Psi: return "psi" + std::to_string(idx.rank);
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, RNIndex idx) { return os << to_string(idx); }

RNIndex parse_rn_index(std::string_view text) {
  if (text == "bot") return RNIndex::bot();
  if (text == "top") return RNIndex::top();
  if (text.size() > 3 && (text.substr(0, 3) == "phi" || text.substr(0, 3) == "psi")) {
    std::uint32_t n = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1) {
      return text[1] == 'h' ? RNIndex::phi(n) : RNIndex::psi(n);
    }
  }
  throw FormatError("not an index: '" + std::string(text) + "'");
}

// The three operations below are the complete operation table of the
// lattice, one case per row group. Names follow the table: n is the rank
// of x, m the rank of y.

RNIndex meet(RNIndex x, RNIndex y) {
  if (x.is_bot() || y.is_bot()) return RNIndex::bot();
  if (x.is_top()) return y;
  if (y.is_top()) return x;
  if (x.is_psi() && y.is_psi()) return RNIndex::psi(std::min(x.rank, y.rank));
  if (x.is_phi() && y.is_phi()) {
    const auto lo = std::min(x.rank, y.rank);
    const auto hi = std::max(x.rank, y.rank);
    if (lo == hi) return x;
    if (hi == lo + 1) return lo == 1 ? RNIndex::bot() : RNIndex::psi(lo - 1);
    return RNIndex::phi(lo);
  }
  // One phi, one psi.
  const auto n = x.is_phi() ? x.rank : y.rank;  // phi rank
  const auto m = x.is_phi() ? y.rank : x.rank;  // psi rank
  if (m > n) return RNIndex::phi(n);
  if (m == n) return n == 1 ? RNIndex::bot() : RNIndex::psi(n - 1);
  return RNIndex::psi(m);
}

RNIndex join(RNIndex x, RNIndex y) {
  if (x.is_top() || y.is_top()) return RNIndex::top();
  if (x.is_bot()) return y;
  if (y.is_bot()) return x;
  if (x.is_psi() && y.is_psi()) return RNIndex::psi(std::max(x.rank, y.rank));
  if (x.is_phi() && y.is_phi()) {
    const auto lo = std::min(x.rank, y.rank);
    const auto hi = std::max(x.rank, y.rank);
    if (lo == hi) return x;
    if (hi == lo + 1) return RNIndex::psi(lo + 2);
    return RNIndex::phi(hi);
  }
  const auto n = x.is_phi() ? x.rank : y.rank;  // phi rank
  const auto m = x.is_phi() ? y.rank : x.rank;  // psi rank
  if (m > n) return RNIndex::psi(m);
  if (m == n) return RNIndex::psi(n + 1);
  return RNIndex::phi(n);
}

RNIndex rpc(RNIndex x, RNIndex y) {
  if (x.is_bot() || y.is_top()) return RNIndex::top();
  if (x.is_top()) return y;
  const auto n = x.rank;
  if (y.is_bot()) {
    if (x.is_phi()) {
      if (n == 1) return RNIndex::phi(2);
      if (n == 2) return RNIndex::phi(1);
      return RNIndex::bot();
    }
    return n == 1 ? RNIndex::phi(1) : RNIndex::bot();
  }
  const auto m = y.rank;
  if (x.is_phi() && y.is_phi()) {
    if (m == n) return RNIndex::top();
    if (m == n + 1) return RNIndex::phi(n + 1);
    if (m > n + 1) return RNIndex::top();
    return RNIndex::phi(m);
  }
  if (x.is_phi()) {  // phi_n -> psi_m
    if (m > n) return RNIndex::top();
    if (m == n) return RNIndex::phi(n + 1);
    if (m + 1 == n) return RNIndex::phi(n + 1);
    if (m + 2 == n) return RNIndex::phi(n - 1);
    return RNIndex::psi(m);
  }
  if (y.is_psi()) {  // psi_n -> psi_m
    if (m >= n) return RNIndex::top();
    if (m + 1 == n) return RNIndex::phi(n);
    return RNIndex::psi(m);
  }
  // psi_n -> phi_m
  if (m > n) return RNIndex::top();
  return RNIndex::phi(m);
}

bool leq(RNIndex x, RNIndex y) { return meet(x, y) == x; }

std::vector<RNIndex> indices_up_to(std::uint32_t max_rank) {
  std::vector<RNIndex> out{RNIndex::bot(), RNIndex::top()};
  out.reserve(2 + 2 * static_cast<std::size_t>(max_rank));
  for (std::uint32_t k = 1; k <= max_rank; ++k) {
    out.push_back(RNIndex::phi(k));
    out.push_back(RNIndex::psi(k));
  }
  return out;
}

namespace {

RNIndex apply(NodeKind kind, RNIndex l, RNIndex r) {
  switch (kind) {
    case NodeKind::And: return meet(l, r);
    case NodeKind::Or: return join(l, r);
    case NodeKind::Impl: return rpc(l, r);
    case NodeKind::Var: return RNIndex::psi(1);
    case NodeKind::Bot: return RNIndex::bot();
  }
  throw std::logic_error("apply: bad node kind");
}

}  // namespace

RNIndex rn_index(const Formula& f, std::uint64_t* visited) {
  std::unordered_map<const void*, RNIndex> value;
  std::vector<std::pair<const Formula*, bool>> todo{{&f, false}};
  while (!todo.empty()) {
    auto [p, expanded] = todo.back();
    todo.pop_back();
    if (value.count(p->id())) continue;
    if (!is_binary(p->kind())) {
      value.emplace(p->id(), apply(p->kind(), {}, {}));
      if (visited) ++*visited;
      continue;
    }
    if (!expanded) {
      todo.push_back({p, true});
      todo.push_back({&p->right(), false});
      todo.push_back({&p->left(), false});
      continue;
    }
    value.emplace(p->id(),
                  apply(p->kind(), value.at(p->left().id()), value.at(p->right().id())));
    if (visited) ++*visited;
  }
  return value.at(f.id());
}

RNIndex rn_index_dag(const FormulaDag& g) {
  // Children precede parents, so one pass in id order suffices.
  std::vector<RNIndex> value;
  value.reserve(g.size());
  for (const DagNode& n : g.nodes()) {
    value.push_back(is_binary(n.kind) ? apply(n.kind, value[n.left], value[n.right])
                                      : apply(n.kind, {}, {}));
  }
  return value.at(g.root());
}

bool is_valid(const Formula& f) { return rn_index(f).is_top(); }

}  // namespace ipc1
