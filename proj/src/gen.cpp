// SPDX-License-Identifier: Apache-2.0

#include "oppm/gen.hpp"

#include <random>
#include <string>

#include "oppm/error.hpp"

namespace oppm::gen {
namespace {

void require_sizes(std::size_t n, Symbol sigma) {
  if (n == 0) throw InvalidInput("size must be positive");
  if (sigma < 1) throw InvalidInput("sigma must be at least 1");
}

}  // namespace

AdversarialInstance adversarial(std::size_t height, std::size_t m) {
  if (height < 3) throw InvalidInput("adversarial height must be at least 3");
  if (m < 1 || m > height - 2) {
    throw InvalidInput("pattern length must lie in [1, " +
                       std::to_string(height - 2) + "]");
  }

  const std::size_t node_count = (std::size_t{2} << height) - 1;
  std::vector<TreeEdge> edges;
  edges.reserve(node_count - 1);

  auto label_into = [height](std::size_t depth, std::size_t sibling) -> Symbol {
    if (depth + 1 < height) return static_cast<Symbol>(depth + 1);
    if (depth + 1 == height) return static_cast<Symbol>(sibling);
    return 0;
  };

  // Preorder numbering via an explicit stack of (node, depth).
  std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [u, d] = stack.back();
    stack.pop_back();
    if (d == height) continue;
    // The left subtree occupies the ids right after u; the right subtree
    // follows it.
    const std::size_t subtree = (std::size_t{2} << (height - d - 1)) - 1;
    const NodeId left = u + 1;
    const NodeId right = u + 1 + subtree;
    edges.push_back({u, left, label_into(d + 1, 0)});
    edges.push_back({u, right, label_into(d + 1, 1)});
    stack.emplace_back(right, d + 1);
    stack.emplace_back(left, d + 1);
  }

  Sequence pattern(m);
  for (std::size_t i = 0; i < m; ++i) pattern[i] = static_cast<Symbol>(i + 2);
  return {build_tree(node_count, edges), std::move(pattern), height, m};
}

Sequence random_string(std::size_t n, Symbol sigma, std::uint64_t seed) {
  if (sigma < 1) throw InvalidInput("sigma must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Symbol> pick(1, sigma);
  Sequence s(n);
  for (Symbol& c : s) c = pick(rng);
  return s;
}

TextTree random_tree(std::size_t node_count, Symbol sigma, std::uint64_t seed) {
  require_sizes(node_count, sigma);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Symbol> pick(1, sigma);
  std::vector<TreeEdge> edges;
  edges.reserve(node_count - 1);
  for (NodeId v = 1; v < node_count; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    const NodeId p = parent(rng);
    edges.push_back({p, v, pick(rng)});
  }
  return build_tree(node_count, edges);
}

TextTree random_chain(std::size_t length, Symbol sigma, std::uint64_t seed) {
  const Sequence labels = random_string(length, sigma, seed);
  std::vector<TreeEdge> edges;
  edges.reserve(length);
  for (std::size_t i = 0; i < length; ++i) edges.push_back({i, i + 1, labels[i]});
  return build_tree(length + 1, edges);
}

TextDag random_dag(std::size_t vertex_count, double density, Symbol sigma,
                   std::uint64_t seed) {
  require_sizes(vertex_count, sigma);
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidInput("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Symbol> pick(1, sigma);
  std::bernoulli_distribution keep(density);
  std::vector<DagEdge> edges;
  for (VertexId i = 0; i < vertex_count; ++i) {
    for (VertexId j = i + 1; j < vertex_count; ++j) {
      if (keep(rng)) edges.push_back({i, pick(rng), j});
    }
  }
  return TextDag(vertex_count, std::move(edges));
}

}  // namespace oppm::gen
