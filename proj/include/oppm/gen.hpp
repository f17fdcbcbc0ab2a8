// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_GEN_HPP
#define OPPM_GEN_HPP

#include <cstddef>
#include <cstdint>

#include "oppm/dag.hpp"
#include "oppm/tree_text.hpp"
#include "oppm/types.hpp"

namespace oppm::gen {

/// Complete binary tree on which an unpruned tree matcher needs Theta(m N)
/// failure transitions, together with its increasing pattern.
///
/// Root paths down to depth h-2 carry labels 2, 3, ..., h-1 (the edge into a
/// depth-d node is labeled d + 1). The two edges below every depth-(h-2)
/// node are labeled 0 and 1 and every leaf edge is labeled 0. Nodes are
/// numbered in depth-first preorder. The pattern is (2, 3, ..., m + 1).
struct AdversarialInstance {
  TextTree tree;
  Sequence pattern;
  std::size_t height;
  std::size_t m;
};

/// Requires h >= 3 and 1 <= m <= h - 2; throws InvalidInput otherwise.
AdversarialInstance adversarial(std::size_t height, std::size_t m);

/// `n` symbols drawn uniformly from [1, sigma].
Sequence random_string(std::size_t n, Symbol sigma, std::uint64_t seed);

/// `node_count` nodes; node i > 0 hangs below a uniformly chosen earlier
/// node, labels uniform in [1, sigma].
TextTree random_tree(std::size_t node_count, Symbol sigma, std::uint64_t seed);

/// Chain of `length` edges labeled by a random string.
TextTree random_chain(std::size_t length, Symbol sigma, std::uint64_t seed);

/// Each pair i < j gets an edge i -> j with probability `density`.
TextDag random_dag(std::size_t vertex_count, double density, Symbol sigma,
                   std::uint64_t seed);

}  // namespace oppm::gen

#endif  // OPPM_GEN_HPP
