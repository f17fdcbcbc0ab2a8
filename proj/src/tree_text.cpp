// SPDX-License-Identifier: Apache-2.0

#include "oppm/tree_text.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oppm/error.hpp"

namespace oppm {
namespace {

constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

// Nodes in breadth-first order from the root; shorter than node_count when
// some node is unreachable.
std::vector<NodeId> bfs_order(std::span<const std::size_t> child_begin,
                              std::span<const NodeId> child_list,
                              std::size_t node_count) {
  std::vector<NodeId> order;
  order.reserve(node_count);
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId u = order[head];
    for (std::size_t k = child_begin[u]; k < child_begin[u + 1]; ++k) {
      order.push_back(child_list[k]);
    }
  }
  return order;
}

}  // namespace

std::vector<TreeEdge> TextTree::edges() const {
  std::vector<TreeEdge> out;
  out.reserve(node_count() > 0 ? node_count() - 1 : 0);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId c : children(u)) out.push_back({u, c, label_[c]});
  }
  return out;
}

TextTree build_tree(std::size_t node_count, std::span<const TreeEdge> edges) {
  if (node_count == 0) throw ValidationError("tree must have a root node", 0);

  TextTree tree;
  tree.parent_.assign(node_count, kNoParent);
  tree.label_.assign(node_count, 0);

  std::vector<std::size_t> degree(node_count + 1, 0);
  std::vector<std::size_t> entering(node_count, ValidationError::kNoEdge);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const TreeEdge& e = edges[k];
    if (e.parent >= node_count) {
      throw ValidationError("unknown parent id " + std::to_string(e.parent),
                            e.parent, k);
    }
    if (e.child >= node_count) {
      throw ValidationError("unknown child id " + std::to_string(e.child),
                            e.child, k);
    }
    if (e.child == 0) throw ValidationError("root 0 cannot have a parent", 0, k);
    if (tree.parent_[e.child] != kNoParent) {
      throw ValidationError("duplicate child id " + std::to_string(e.child),
                            e.child, k);
    }
    tree.parent_[e.child] = e.parent;
    tree.label_[e.child] = e.label;
    entering[e.child] = k;
    ++degree[e.parent];
  }
  for (NodeId v = 1; v < node_count; ++v) {
    if (tree.parent_[v] == kNoParent) {
      throw ValidationError("disconnected node " + std::to_string(v), v);
    }
  }

  tree.child_begin_.assign(node_count + 1, 0);
  for (NodeId u = 0; u < node_count; ++u) {
    tree.child_begin_[u + 1] = tree.child_begin_[u] + degree[u];
  }
  tree.child_list_.resize(edges.size());
  std::vector<std::size_t> fill(tree.child_begin_.begin(),
                                tree.child_begin_.end() - 1);
  for (const TreeEdge& e : edges) tree.child_list_[fill[e.parent]++] = e.child;

  const auto order = bfs_order(tree.child_begin_, tree.child_list_, node_count);
  if (order.size() != node_count) {
    std::vector<bool> reached(node_count, false);
    for (NodeId v : order) reached[v] = true;
    const auto it = std::find(reached.begin(), reached.end(), false);
    const auto v = static_cast<NodeId>(it - reached.begin());
    throw ValidationError("node " + std::to_string(v) + " lies on a cycle", v,
                          entering[v]);
  }

  tree.depth_.assign(node_count, 0);
  for (NodeId v : order) {
    if (v != 0) tree.depth_[v] = tree.depth_[tree.parent_[v]] + 1;
    tree.max_depth_ = std::max(tree.max_depth_, tree.depth_[v]);
  }
  tree.height_ = compute_subtree_heights(tree);
  return tree;
}

TextTree build_tree(std::span<const TreeEdge> edges) {
  return build_tree(edges.size() + 1, edges);
}

std::vector<std::size_t> compute_subtree_heights(const TextTree& tree) {
  const std::size_t n = tree.node_count();
  std::vector<std::size_t> height(n, 0);

  // Explicit post-order: a node is finished once all its children are.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto kids = tree.children(u);
    if (next < kids.size()) {
      stack.emplace_back(kids[next++], 0);
      continue;
    }
    const NodeId done = u;
    stack.pop_back();
    if (!stack.empty()) {
      const NodeId p = stack.back().first;
      height[p] = std::max(height[p], height[done] + 1);
    }
  }
  return height;
}

Sequence path_labels(const TextTree& tree, NodeId v) {
  Sequence labels(tree.depth(v));
  for (std::size_t d = labels.size(); d > 0; --d) {
    labels[d - 1] = tree.edge_label(v);
    v = tree.parent(v);
  }
  return labels;
}

}  // namespace oppm
