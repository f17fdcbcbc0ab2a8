// SPDX-License-Identifier: Apache-2.0

#include "oppm/oracles.hpp"

#include <doctest.h>

#include "oppm/error.hpp"

using oppm::Sequence;
using namespace oppm::oracle;

TEST_CASE("naive_isomorphic") {
  CHECK(naive_isomorphic(Sequence{22, 41, 35, 37}, Sequence{18, 48, 29, 42}));
  CHECK(naive_isomorphic(Sequence{4, 4, 1}, Sequence{4, 4, 1}));
  CHECK_FALSE(naive_isomorphic(Sequence{1, 1}, Sequence{1, 2}));
  CHECK_FALSE(naive_isomorphic(Sequence{1}, Sequence{1, 2}));
}

TEST_CASE("naive tables") {
  const auto [lmax, lmin] = naive_lmax_lmin(Sequence{22, 41, 35, 37});
  CHECK(lmax == std::vector<std::size_t>{0, 1, 1, 3});
  CHECK(lmin == std::vector<std::size_t>{0, 0, 2, 2});
  CHECK(naive_lmax_lmin(Sequence{5}).first == std::vector<std::size_t>{0});
  CHECK(naive_border(Sequence{22, 41, 35, 37}) == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(naive_border(Sequence{1, 2, 3, 4, 5}) == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("naive matchers") {
  CHECK(naive_match_string(Sequence{22, 41, 35, 37}, Sequence{63, 18, 48, 29, 42, 56, 25, 51}) ==
        std::vector<std::size_t>{5});
  CHECK(naive_match_string(Sequence{1, 2, 3}, Sequence{1, 2}).empty());

  const std::vector<oppm::TreeEdge> edges{{0, 1, 10}, {1, 2, 20}, {1, 3, 5}, {2, 4, 30}};
  const auto tree = oppm::build_tree(edges);
  CHECK(naive_match_tree(Sequence{1, 2}, tree) == std::vector<oppm::NodeId>{2, 4});
  CHECK(naive_match_tree(Sequence{8}, tree) == std::vector<oppm::NodeId>{1, 2, 3, 4});
}

TEST_CASE("naive_opsm") {
  CHECK(naive_opsm(Sequence{1, 2, 3}, Sequence{5, 2, 1, 4, 3, 6}));
  CHECK_FALSE(naive_opsm(Sequence{1, 2}, Sequence{2, 1}));
  CHECK_FALSE(naive_opsm(Sequence{1, 2, 3}, Sequence{1, 2}));
  CHECK_THROWS_AS(naive_opsm(Sequence{1}, Sequence(kMaxOpsmText + 1, 0)),
                  oppm::SizeGuardError);
}

TEST_CASE("naive_match_graph") {
  const std::vector<LabeledArc> arcs{{0, 1, 5}, {1, 2, 3}, {0, 2, 9}};
  CHECK(naive_match_graph(Sequence{2, 1}, 3, arcs));
  CHECK_FALSE(naive_match_graph(Sequence{1, 2}, 3, arcs));
  CHECK_FALSE(naive_match_graph(Sequence{1, 1, 1}, 3, arcs));
}
