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

#include <string>

#include "ipc1/error.hpp"
#include "ipc1/formula.hpp"
#include "ipc1/lattice.hpp"

using namespace ipc1;

namespace {

Formula a() { return Formula::var(); }
Formula bot() { return Formula::bot(); }

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("a") == a());
  CHECK(parse("~a") == Formula::impl(a(), bot()));
  CHECK(parse("top") == Formula::impl(bot(), bot()));
  CHECK(parse("  ( a ) ") == a());
  CHECK(parse("a & a | a") == Formula::disj(Formula::conj(a(), a()), a()));
  CHECK(parse("a -> a -> bot") == Formula::impl(a(), Formula::impl(a(), bot())));
  CHECK(parse("~a & a") == Formula::conj(Formula::impl(a(), bot()), a()));
  CHECK(parse("~~a") == Formula::neg(Formula::neg(a())));
  CHECK(parse("a | a | a") == Formula::disj(Formula::disj(a(), a()), a()));
}

TEST_CASE("parse reports errors with positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("a &") == 3);
  CHECK(position_of("(a") == 0);
  CHECK(position_of("a)") == 1);
  CHECK(position_of("a $ a") == 2);
  CHECK(position_of("a a") == 2);
  CHECK_THROWS_AS(parse("a -> b"), UnknownVariable);
  CHECK_THROWS_AS(parse("p"), UnknownVariable);
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(a()) == "a");
  CHECK(render(Formula::impl(a(), bot())) == "a -> bot");
  CHECK(render(Formula::disj(Formula::impl(a(), bot()), a())) == "(a -> bot) | a");
  CHECK(render(parse("(a -> a) -> a")) == "(a -> a) -> a");
  CHECK(render(parse("a -> (a -> a)")) == "a -> a -> a");
  CHECK(render(parse("(a | a) & a")) == "(a | a) & a");
  CHECK(render(parse("a | (a | a)")) == "a | (a | a)");
}

TEST_CASE("length counts occurrences") {
  CHECK(length(a()) == 1);
  CHECK(length(Formula::impl(a(), bot())) == 3);
  CHECK(length(Formula::disj(a(), a())) == 3);
  CHECK(length(parse("top")) == 3);
}

TEST_CASE("rn_formula follows the recursion") {
  const Formula not_a = Formula::impl(a(), bot());
  CHECK(rn_formula(RNIndex::psi(1)) == a());
  CHECK(rn_formula(RNIndex::phi(1)) == not_a);
  CHECK(rn_formula(RNIndex::phi(2)) == Formula::impl(not_a, a()));
  CHECK(rn_formula(RNIndex::psi(3)) ==
        Formula::disj(Formula::impl(not_a, a()), Formula::disj(not_a, a())));
  CHECK(rn_formula(RNIndex::bot()) == bot());
  CHECK(rn_formula(RNIndex::top()) == Formula::impl(bot(), bot()));

  for (std::uint32_t k = 1; k < kDefaultRankCap; ++k) {
    const Formula phi = rn_formula(RNIndex::phi(k));
    const Formula psi = rn_formula(RNIndex::psi(k));
    CHECK(rn_formula(RNIndex::phi(k + 1)) == Formula::impl(phi, psi));
    CHECK(rn_formula(RNIndex::psi(k + 1)) == Formula::disj(phi, psi));
    CHECK(length(rn_formula(RNIndex::phi(k + 1))) > length(phi));
    CHECK(length(rn_formula(RNIndex::psi(k + 1))) > length(psi));
  }
}

TEST_CASE("rn_formula enforces the rank cap") {
  CHECK_THROWS_AS(rn_formula(RNIndex::psi(33)), SizeLimitExceeded);
  CHECK_NOTHROW(rn_formula(RNIndex::psi(40), 40));
  // Sharing keeps huge ranks cheap to build; length saturates.
  CHECK(length(rn_formula(RNIndex::phi(200), 200)) == UINT64_MAX);
}

TEST_CASE("random_formula") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Formula f = random_formula(1, seed);
    CHECK((f == a() || f == bot()));
  }
  CHECK(random_formula(5, 7) == random_formula(5, 7));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t n = 1 + i % 80;
    CHECK(length(random_formula(n, i)) <= n);
  }
  CHECK_THROWS_AS(random_formula(0, 1), BadParameters);
}

TEST_CASE("parse and render round-trip") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Formula f = random_formula(1 + seed % 60, seed);
    CHECK(parse(render(f)) == f);
  }
}

TEST_CASE("negation is sugar") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::string x = render(random_formula(1 + seed % 30, seed));
    CHECK(parse("~(" + x + ")") == parse("(" + x + ") -> bot"));
  }
}

TEST_CASE("deep inputs do not exhaust the stack") {
  std::string text;
  const int depth = 200000;
  for (int i = 0; i < depth; ++i) text += "a -> ";
  text += "a";
  const Formula f = parse(text);
  CHECK(length(f) == 2 * depth + 1);
  CHECK(rn_index(f) == RNIndex::top());
  CHECK(parse(render(f)) == f);

  std::string nested(depth, '(');
  nested += "a";
  nested += std::string(depth, ')');
  CHECK(parse(nested) == a());
}

TEST_CASE("rn_formula_dag") {
  CHECK(rn_formula_dag(RNIndex::psi(1)).size() == 1);
  const FormulaDag phi2 = rn_formula_dag(RNIndex::phi(2));
  CHECK(phi2.size() == 4);
  CHECK(unfold(phi2) == rn_formula(RNIndex::phi(2)));
  CHECK(rn_formula_dag(RNIndex::psi(10)).size() <= 22);
  for (std::uint32_t k = 1; k <= 20; ++k) {
    CHECK(unfold(rn_formula_dag(RNIndex::psi(k))) == rn_formula(RNIndex::psi(k)));
    CHECK(unfold(rn_formula_dag(RNIndex::phi(k))) == rn_formula(RNIndex::phi(k)));
  }
}

TEST_CASE("share and unfold are inverse") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Formula f = random_formula(1 + seed % 60, seed);
    const FormulaDag g = share(f);
    CHECK(unfold(g) == f);
    CHECK(g.size() <= length(f));
  }
  // Structurally equal subtrees collapse to one node.
  CHECK(share(parse("(a -> bot) | (a -> bot)")).size() == 4);
}

TEST_CASE("DAG text format") {
  const FormulaDag g = rn_formula_dag(RNIndex::phi(5));
  CHECK(unfold(read_dag(write_dag(g))) == unfold(g));

  // Ids are arbitrary tokens and may be listed in any order.
  const FormulaDag h = read_dag("n := or x x\nx := impl y z\ny := a\nz := bot\nroot n\n");
  CHECK(unfold(h) == parse("~a | ~a"));

  CHECK_THROWS_AS(read_dag("x := impl x x\nroot x\n"), FormatError);
  CHECK_THROWS_AS(read_dag("x := impl y y\nroot x\n"), FormatError);
  CHECK_THROWS_AS(read_dag("x := a\n"), FormatError);
  CHECK_THROWS_AS(read_dag("x := a\nx := bot\nroot x\n"), FormatError);
  CHECK_THROWS_AS(read_dag("x := xor x x\nroot x\n"), FormatError);
  CHECK_THROWS_AS(read_dag("x := a b\nroot x\n"), FormatError);
}
