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


#include <doctest.h>

#include <set>

#include "ipc1/error.hpp"
#include "ipc1/formula.hpp"
#include "ipc1/kripke.hpp"
#include "ipc1/lattice.hpp"
#include "ipc1/model_io.hpp"
#include "support/oracles.hpp"

using namespace ipc1;

namespace {

using V = Violation::Kind;

KripkeModel explicit_model(std::vector<std::string> states, std::vector<NamedEdge> edges,
                           std::vector<std::string> val) {
  return KripkeModel(std::move(states), edges, val, Closure::Explicit);
}

KripkeModel closed_model(std::vector<std::string> states, std::vector<NamedEdge> edges,
                         std::vector<std::string> val) {
  return KripkeModel(std::move(states), edges, val, Closure::ReflexiveTransitive);
}

StateId base(const KripkeModel& h, std::uint32_t n) { return h.id_of(std::to_string(n)); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(explicit_model({"w"}, {{"w", "w"}}, {})).empty());

  auto v = validate(explicit_model({"w", "v"}, {{"w", "w"}, {"v", "v"}, {"w", "v"}}, {"w"}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == V::NonMonotoneValuation);
  CHECK(v[0].first == "w");
  CHECK(v[0].second == "v");

  v = validate(explicit_model({"x", "y", "z"},
                              {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"y", "z"}}, {}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == V::NotTransitive);
  CHECK(v[0].first == "x");
  CHECK(v[0].second == "z");

  v = validate(explicit_model({"x"}, {}, {}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == V::NotReflexive);

  v = validate(explicit_model({}, {}, {}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == V::EmptyModel);

  CHECK_THROWS_AS(require_valid(explicit_model({"x"}, {}, {})), InvalidModel);
  CHECK_THROWS_AS(explicit_model({"x"}, {{"x", "y"}}, {}), UnknownState);
  CHECK_THROWS_AS(explicit_model({"x", "x"}, {}, {}), FormatError);
}

TEST_CASE("saturate") {
  const KripkeModel one = closed_model({"x", "y"}, {{"x", "y"}}, {});
  CHECK(one.related(0, 0));
  CHECK(one.related(1, 1));
  CHECK(one.related(0, 1));
  CHECK_FALSE(one.related(1, 0));

  const KripkeModel chain = closed_model({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}, {});
  CHECK(chain.related(0, 2));
  CHECK(validate(chain).empty());

  Relation r(3, StateSet(3));
  r[0].set(1);
  CHECK(saturate(r, Closure::Explicit) == r);
}

TEST_CASE("canonical models") {
  const KripkeModel h1 = canonical(1);
  CHECK(h1.names() == std::vector<std::string>{"1"});
  CHECK(h1.holds_a(0));

  const KripkeModel h2 = canonical(2);
  CHECK(h2.names() == std::vector<std::string>{"2"});
  CHECK_FALSE(h2.holds_a(0));

  const KripkeModel h9 = canonical(9);
  CHECK(h9.size() == 8);
  CHECK_FALSE(h9.find("8").has_value());
  CHECK(h9.related(h9.id_of("9"), h9.id_of("7")));
  CHECK_FALSE(h9.related(h9.id_of("3"), h9.id_of("2")));
  CHECK(h9.related(h9.id_of("3"), h9.id_of("1")));

  for (std::uint32_t n = 1; n <= 20; ++n) {
    const KripkeModel h = canonical(n);
    CHECK(validate(h).empty());
    for (StateId w = 0; w < h.size(); ++w) {
      CHECK(model_index(h, w) == static_cast<std::uint32_t>(std::stoul(h.name(w))));
    }
    CHECK(is_directed(h) == (n <= 3));
  }
  CHECK_THROWS_AS(canonical(0), BadParameters);
}

TEST_CASE("model index basics") {
  CHECK(model_index(explicit_model({"w"}, {{"w", "w"}}, {"w"}), 0) == 1);
  CHECK(model_index(explicit_model({"w"}, {{"w", "w"}}, {}), 0) == 2);
  CHECK_THROWS_AS(model_index(explicit_model({"w"}, {}, {}), 0), InvalidModel);

  // A cluster of two states under a true leaf.
  const KripkeModel m = closed_model({"x", "y", "t"}, {{"x", "y"}, {"y", "x"}, {"x", "t"}}, {"t"});
  CHECK(model_index(m, "x") == 3);
  CHECK(model_index(m, "y") == 3);
  CHECK(model_index(m, "t") == 1);
}

TEST_CASE("model index matches the defining identity") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const KripkeModel m = oracle::random_model(1 + seed % 10, seed);
    REQUIRE(validate(m).empty());
    const auto h = model_indices(m);
    const Condensation c(m);
    for (StateId w = 0; w < m.size(); ++w) {
      std::set<std::uint32_t> up;
      for (StateId v = 0; v < m.size(); ++v) {
        if (m.related(w, v)) up.insert(h[v]);
        if (m.related(w, v) && m.related(v, w)) CHECK(h[v] == h[w]);
        if (c.cluster_of(v) == c.cluster_of(w)) CHECK((m.related(w, v) && m.related(v, w)));
      }
      std::set<std::uint32_t> expected{h[w]};
      for (std::uint32_t k = 1; k + 2 <= h[w]; ++k) expected.insert(k);
      CHECK(up == expected);
    }
  }
}

TEST_CASE("model index agrees with the profile oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const KripkeModel m = oracle::random_model(1 + seed % 7, 1000 + seed);
    for (StateId w = 0; w < m.size(); ++w) CHECK(model_index(m, w) == oracle::model_index(m, w));
  }
}

TEST_CASE("canonical table") {
  for (std::uint32_t n = 1; n <= 15; ++n) {
    const KripkeModel h = canonical(n);
    for (std::uint32_t k = 1; k <= 15; ++k) {
      CHECK(check_brute(h, base(h, n), rn_formula(RNIndex::psi(k))) == (n <= k));
      CHECK(check_brute(h, base(h, n), rn_formula(RNIndex::phi(k))) == (n < k || n == k + 1));
    }
  }
}

TEST_CASE("checker examples") {
  const KripkeModel h5 = canonical(5);
  CHECK(check_brute(h5, "5", rn_formula(RNIndex::psi(6))));
  CHECK(check_brute(h5, "5", rn_formula(RNIndex::phi(4))));
  CHECK_FALSE(check_brute(h5, "5", rn_formula(RNIndex::phi(5))));
  const KripkeModel h7 = canonical(7);
  CHECK(check_fast(h7, "7", rn_formula(RNIndex::psi(7))));
  CHECK(check_fast(h7, "7", rn_formula(RNIndex::phi(6))));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KripkeModel m = oracle::random_model(1 + seed % 6, seed);
    for (StateId w = 0; w < m.size(); ++w) {
      CHECK_FALSE(check_brute(m, w, parse("bot")));
      CHECK_FALSE(check_fast(m, w, parse("bot")));
      CHECK(check_fast(m, w, parse("top")));
      CHECK(check_brute(m, w, parse("top")));
    }
  }
  CHECK_THROWS_AS(check_fast(h5, "6", parse("a")), UnknownState);
  CHECK_THROWS_AS(check_brute(explicit_model({"w"}, {}, {}), 0, parse("a")), InvalidModel);
}

TEST_CASE("fast and brute checkers agree") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const KripkeModel m = oracle::random_model(1 + seed % 12, seed);
    const Formula f = random_formula(1 + seed % 60, seed * 7 + 1);
    for (StateId w = 0; w < m.size(); ++w) {
      const bool expected = oracle::holds(m, w, f);
      CHECK(check_brute(m, w, f) == expected);
      CHECK(check_fast(m, w, f) == expected);
    }
  }
}

TEST_CASE("truth is monotone") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const KripkeModel m = oracle::random_model(2 + seed % 9, seed);
    const Formula f = random_formula(1 + seed % 40, seed + 99);
    const StateSet t = truth_set(m, f);
    for (StateId w = 0; w < m.size(); ++w) {
      if (!t.test(w)) continue;
      CHECK(m.successors(w).is_subset_of(t));
    }
  }
}

TEST_CASE("checker statistics") {
  CheckStats fast, brute;
  const KripkeModel h = canonical(9);
  const Formula f = rn_formula(RNIndex::psi(20));
  check_fast(h, base(h, 9), f, &fast);
  check_brute(h, base(h, 9), f, &brute);
  CHECK(fast.formula_nodes > 0);
  CHECK(brute.formula_nodes > 0);
  CHECK(brute.state_visits >= brute.formula_nodes);
}

TEST_CASE("directedness") {
  CHECK(is_directed(explicit_model({"w"}, {{"w", "w"}}, {})));
  CHECK(is_directed(canonical(3)));
  CHECK_FALSE(is_directed(canonical(4)));
}

TEST_CASE("model JSON round-trip") {
  const KripkeModel m = load_model(R"({"states": ["s0", 1], "edges": [["s0", 1]],
                                       "valuation": [1], "closure": "reflexive-transitive"})");
  CHECK(m.size() == 2);
  CHECK(m.related(m.id_of("s0"), m.id_of("1")));
  CHECK(validate(m).empty());
  const KripkeModel back = load_model(model_to_json(m));
  CHECK(back.names() == m.names());
  CHECK(back.relation() == m.relation());
  CHECK(back.valuation() == m.valuation());

  for (std::uint32_t n = 1; n <= 12; ++n) {
    const KripkeModel h = load_model(model_to_json(canonical(n)));
    CHECK(validate(h).empty());
    CHECK(h.relation() == canonical(n).relation());
  }

  CHECK_THROWS_AS(load_model("{"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"edges": []})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"states": ["x"], "edges": [["x"]]})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"states": ["x"], "closure": "none"})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"states": ["x"], "valuation": ["y"]})"), UnknownState);
}

TEST_CASE("DOT output") {
  const std::string dot = model_to_dot(canonical(4));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  // 3->1, 4->1, 4->2, 6->3, 6->4; the rest follow by transitivity.
  const auto cover = covering_pairs(canonical(6));
  CHECK(cover.size() == 5);
}
