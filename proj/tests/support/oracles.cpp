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


#include "support/oracles.hpp"

#include <functional>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

namespace ipc1::oracle {

Extension extension(RNIndex x, std::uint32_t limit) {
  Extension e(limit + 1, false);
  for (std::uint32_t n = 1; n <= limit; ++n) {
    switch (x.kind) {
      case RNKind::Bot: e[n] = false; break;
      case RNKind::Top: e[n] = true; break;
      case RNKind::Psi: e[n] = n <= x.rank; break;
      case RNKind::Phi: e[n] = n + 1 <= x.rank || n == x.rank + 1; break;
    }
  }
  return e;
}

Extension meet(const Extension& x, const Extension& y) {
  Extension e(x.size());
  for (std::size_t i = 1; i < x.size(); ++i) e[i] = x[i] && y[i];
  return e;
}

Extension join(const Extension& x, const Extension& y) {
  Extension e(x.size());
  for (std::size_t i = 1; i < x.size(); ++i) e[i] = x[i] || y[i];
  return e;
}

Extension rpc(const Extension& x, const Extension& y) {
  Extension e(x.size(), false);
  for (std::size_t m = 1; m < x.size(); ++m) {
    bool ok = true;
    for (std::size_t j = 1; j <= m; ++j) {
      const bool in_w = j == m || j + 2 <= m;
      if (in_w && x[j] && !y[j]) ok = false;
    }
    e[m] = ok;
  }
  return e;
}

bool holds(const KripkeModel& m, StateId w, const Formula& f) {
  std::map<std::pair<const void*, StateId>, bool> memo;
  std::function<bool(StateId, const Formula&)> eval = [&](StateId u, const Formula& g) {
    const auto key = std::make_pair(g.id(), u);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool r = false;
    switch (g.kind()) {
      case NodeKind::Var: r = m.holds_a(u); break;
      case NodeKind::Bot: r = false; break;
      case NodeKind::And: r = eval(u, g.left()) && eval(u, g.right()); break;
      case NodeKind::Or: r = eval(u, g.left()) || eval(u, g.right()); break;
      case NodeKind::Impl:
        r = true;
        for (StateId v = 0; v < m.size(); ++v) {
          if (m.related(u, v) && eval(v, g.left()) && !eval(v, g.right())) {
            r = false;
            break;
          }
        }
        break;
    }
    memo[key] = r;
    return r;
  };
  return eval(w, f);
}

std::vector<RNIndex> all_indices(std::uint32_t max_rank) {
  std::vector<RNIndex> out{RNIndex::bot(), RNIndex::top()};
  for (std::uint32_t k = 1; k <= max_rank; ++k) {
    out.push_back(RNIndex::psi(k));
    out.push_back(RNIndex::phi(k));
  }
  return out;
}

std::vector<bool> rn_profile(const KripkeModel& m, StateId w, std::uint32_t max_rank) {
  std::vector<bool> out;
  for (RNIndex x : all_indices(max_rank)) out.push_back(holds(m, w, rn_formula(x, 64)));
  return out;
}

std::uint32_t model_index(const KripkeModel& m, StateId w) {
  // A model with k states has indices at most 2k.
  const std::uint32_t limit = 2 * static_cast<std::uint32_t>(m.size()) + 2;
  const auto profile = rn_profile(m, w, limit + 2);
  std::uint32_t found = 0;
  for (std::uint32_t n = 1; n <= limit; ++n) {
    const KripkeModel h = canonical(n);
    if (rn_profile(h, h.id_of(std::to_string(n)), limit + 2) == profile) {
      if (found != 0) return 0;
      found = n;
    }
  }
  return found;
}

bool apath(const SliceGraph& g, const std::string& x, const std::string& y) {
  std::map<std::string, std::size_t> slice;
  for (std::size_t i = 0; i < g.slices.size(); ++i) {
    for (const auto& v : g.slices[i]) slice[v] = i;
  }
  std::function<bool(const std::string&)> go = [&](const std::string& v) {
    if (v == y) return true;
    std::vector<std::string> succ;
    for (const auto& [a, b] : g.edges) {
      if (a == v) succ.push_back(b);
    }
    if (succ.empty()) return false;
    if (slice.at(v) % 2 == 1) {
      for (const auto& z : succ) {
        if (go(z)) return true;
      }
      return false;
    }
    for (const auto& z : succ) {
      if (!go(z)) return false;
    }
    return true;
  };
  return go(x);
}

std::uint64_t fib(std::uint32_t k) {
  std::uint64_t a = 1, b = 1;
  for (std::uint32_t i = 1; i < k; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c < b ? std::numeric_limits<std::uint64_t>::max() : c;
  }
  return b;
}

KripkeModel random_model(std::uint32_t states, std::uint64_t seed, double edge_p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(edge_p);
  std::uniform_int_distribution<std::uint32_t> pick(0, states - 1);

  std::vector<std::vector<bool>> r(states, std::vector<bool>(states, false));
  for (std::uint32_t i = 0; i < states; ++i) {
    r[i][i] = true;
    for (std::uint32_t j = 0; j < states; ++j) {
      if (i != j && edge(rng)) r[i][j] = true;
    }
  }
  const std::uint32_t cycles = states / 4 + 1;
  for (std::uint32_t c = 0; c < cycles; ++c) {
    const auto i = pick(rng), j = pick(rng);
    r[i][j] = r[j][i] = true;
  }
  for (std::uint32_t k = 0; k < states; ++k) {
    for (std::uint32_t i = 0; i < states; ++i) {
      for (std::uint32_t j = 0; j < states; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }

  // u ≤ v means v is reachable from u; truth spreads to every reachable state.
  std::vector<bool> val(states, false);
  const std::uint32_t seeds = std::uniform_int_distribution<std::uint32_t>(0, 2)(rng);
  for (std::uint32_t s = 0; s < seeds; ++s) {
    const auto w = pick(rng);
    for (std::uint32_t v = 0; v < states; ++v) {
      if (r[w][v]) val[v] = true;
    }
  }

  std::vector<std::string> names;
  Relation rel(states, StateSet(states));
  StateSet v(states);
  for (std::uint32_t i = 0; i < states; ++i) {
    names.push_back("w" + std::to_string(i));
    for (std::uint32_t j = 0; j < states; ++j) {
      if (r[i][j]) rel[i].set(j);
    }
    if (val[i]) v.set(i);
  }
  return KripkeModel(std::move(names), std::move(rel), std::move(v));
}

FormulaDag random_dag(std::uint32_t nodes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FormulaDag g;
  g.add_var();
  g.add_bot();
  static constexpr NodeKind kOps[] = {NodeKind::And, NodeKind::Or, NodeKind::Impl};
  while (g.size() < nodes) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.size()) - 1);
    const auto l = pick(rng), r = pick(rng);
    g.add(kOps[rng() % 3], l, r);
  }
  g.set_root(static_cast<FormulaDag::Id>(g.size() - 1));
  return g;
}

Formula random_rn_mix(std::uint64_t seed, std::uint32_t max_rank) {
  std::mt19937_64 rng(seed);
  const auto indices = all_indices(max_rank);
  static constexpr NodeKind kOps[] = {NodeKind::And, NodeKind::Or, NodeKind::Impl};
  Formula f = rn_formula(indices[rng() % indices.size()], max_rank);
  const std::uint64_t parts = 1 + rng() % 3;
  for (std::uint64_t i = 0; i < parts; ++i) {
    Formula g = rng() % 3 == 0 ? Formula::var() : rn_formula(indices[rng() % indices.size()], max_rank);
    f = rng() % 2 ? Formula::binary(kOps[rng() % 3], f, g) : Formula::binary(kOps[rng() % 3], g, f);
  }
  return f;
}

}  // namespace ipc1::oracle
