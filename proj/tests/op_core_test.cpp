// SPDX-License-Identifier: Apache-2.0

#include "oppm/op_core.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "oppm/error.hpp"
#include "oppm/oracles.hpp"
#include "test_util.hpp"

using oppm::PatternTables;
using oppm::Sequence;
using Index = std::vector<std::size_t>;

namespace {

Index to_vec(std::span<const std::size_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("Lmax and Lmin of the running example") {
  const Sequence p{22, 41, 35, 37};
  const auto ranks = oppm::compute_lmax_lmin(p);
  CHECK(ranks.lmax == Index{0, 1, 1, 3});
  CHECK(ranks.lmin == Index{0, 0, 2, 2});
}

TEST_CASE("Lmax and Lmin edge cases") {
  const auto single = oppm::compute_lmax_lmin(Sequence{5});
  CHECK(single.lmax == Index{0});
  CHECK(single.lmin == Index{0});

  // Equal values satisfy both <= and >=.
  const auto tie = oppm::compute_lmax_lmin(Sequence{1, 1});
  CHECK(tie.lmax == Index{0, 1});
  CHECK(tie.lmin == Index{0, 1});

  // Rightmost of several equal candidates.
  const auto many = oppm::compute_lmax_lmin(Sequence{3, 3, 1, 3, 2});
  CHECK(many.lmax == Index{0, 1, 0, 2, 3});
  CHECK(many.lmin == Index{0, 1, 2, 2, 4});

  CHECK_THROWS_AS(oppm::compute_lmax_lmin(Sequence{}), oppm::InvalidInput);
  CHECK_THROWS_AS(PatternTables(Sequence{}), oppm::InvalidInput);
}

TEST_CASE("extension test") {
  const PatternTables tables(Sequence{22, 41, 35, 37});
  const Sequence y{18, 48, 29, 42};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(oppm::extends(tables, std::span<const oppm::Symbol>(y).first(i + 1)));
  }

  // State 0 accepts any first character.
  for (oppm::Symbol c : {-5, 0, 1000}) {
    const Sequence w{c};
    CHECK(oppm::extends(tables, w));
  }

  const PatternTables rising(Sequence{1, 2});
  CHECK_FALSE(oppm::extends(rising, Sequence{2, 2}));
  CHECK(oppm::extends(rising, Sequence{2, 3}));
  CHECK_FALSE(oppm::extends(rising, Sequence{3, 2}));
}

TEST_CASE("op_isomorphic examples") {
  CHECK(oppm::op_isomorphic(Sequence{22, 41, 35, 37}, Sequence{18, 48, 29, 42}));
  CHECK(oppm::op_isomorphic(Sequence{1, 1, 2}, Sequence{3, 3, 5}));
  CHECK_FALSE(oppm::op_isomorphic(Sequence{1, 1, 2}, Sequence{3, 4, 5}));
  CHECK_FALSE(oppm::op_isomorphic(Sequence{1, 2}, Sequence{1, 2, 3}));
  CHECK(oppm::op_isomorphic(Sequence{}, Sequence{}));
}

TEST_CASE("border array examples") {
  CHECK(to_vec(PatternTables(Sequence{22, 41, 35, 37}).border()) == Index{0, 1, 1, 2});
  CHECK(to_vec(PatternTables(Sequence{9}).border()) == Index{0});
  CHECK(to_vec(PatternTables(Sequence{1, 2, 3, 4, 5}).border()) == Index{0, 1, 2, 3, 4});
  CHECK(to_vec(PatternTables(Sequence{7, 7, 7}).border()) == Index{0, 1, 2});
  CHECK(to_vec(PatternTables(Sequence{2, 3, 4}).border()) == Index{0, 1, 2});
}

TEST_CASE("tables agree with the definitional oracles on every word over {1,2,3}") {
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    oppm::test::for_each_word(m, 3, [&](const Sequence& p) {
      const PatternTables tables(p);
      const auto [lmax, lmin] = oppm::oracle::naive_lmax_lmin(p);
      REQUIRE(to_vec(tables.lmax()) == lmax);
      REQUIRE(to_vec(tables.lmin()) == lmin);
      REQUIRE(to_vec(tables.border()) == oppm::oracle::naive_border(p));
      ++checked;
    });
  }
  CHECK(checked == 9840);
}

TEST_CASE("tables are invariant under strictly increasing maps") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 500; ++round) {
    const auto p = oppm::test::random_sequence(rng, oppm::test::uniform(rng, 1, 12),
                                               round % 2 ? 4 : 100);
    const PatternTables a(p);
    const PatternTables b(oppm::test::stretched(p));
    CHECK(to_vec(a.lmax()) == to_vec(b.lmax()));
    CHECK(to_vec(a.lmin()) == to_vec(b.lmin()));
    CHECK(to_vec(a.border()) == to_vec(b.border()));
  }
}

TEST_CASE("op_isomorphic agrees with the oracle and is reflexive and symmetric") {
  std::mt19937_64 rng(12);
  for (oppm::Symbol sigma : {2, 100}) {
    for (int round = 0; round < 3000; ++round) {
      const std::size_t n = oppm::test::uniform(rng, 0, 10);
      const auto x = oppm::test::random_sequence(rng, n, sigma);
      const auto y = oppm::test::random_sequence(rng, n, sigma);
      CHECK(oppm::op_isomorphic(x, x));
      CHECK(oppm::op_isomorphic(x, y) == oppm::op_isomorphic(y, x));
      CHECK(oppm::op_isomorphic(x, y) == oppm::oracle::naive_isomorphic(x, y));
    }
  }
}

TEST_CASE("stepwise extension succeeds throughout exactly for isomorphic pairs") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 3000; ++round) {
    const std::size_t n = oppm::test::uniform(rng, 1, 8);
    const auto x = oppm::test::random_sequence(rng, n, 3);
    const auto y = oppm::test::random_sequence(rng, n, 3);
    const PatternTables tables(x);
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      all = oppm::extends(tables, std::span<const oppm::Symbol>(y).first(i + 1));
    }
    CHECK(all == oppm::oracle::naive_isomorphic(x, y));
  }
}
