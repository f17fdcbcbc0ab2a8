// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_TREE_TEXT_HPP
#define OPPM_TREE_TEXT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "oppm/types.hpp"

namespace oppm {

using NodeId = std::size_t;

/// One tree edge: `child` hangs below `parent`, the edge carries `label`.
struct TreeEdge {
  NodeId parent;
  NodeId child;
  Symbol label;
};

/// Rooted, edge-labeled tree. Node 0 is the root. Children keep the order in
/// which their edges were given. Immutable once built.
class TextTree {
 public:
  std::size_t node_count() const noexcept { return parent_.size(); }

  /// Parent of a non-root node. Undefined for the root.
  NodeId parent(NodeId v) const { return parent_[v]; }

  /// Label of the edge entering `v`. Undefined for the root.
  Symbol edge_label(NodeId v) const { return label_[v]; }

  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v],
            child_begin_[v + 1] - child_begin_[v]};
  }

  std::size_t depth(NodeId v) const { return depth_[v]; }

  /// Length of the longest downward path from `v` to a leaf.
  std::size_t subtree_height(NodeId v) const { return height_[v]; }

  std::span<const std::size_t> depths() const noexcept { return depth_; }
  std::span<const std::size_t> subtree_heights() const noexcept {
    return height_;
  }

  /// Length of the longest root-to-leaf path.
  std::size_t max_depth() const noexcept { return max_depth_; }

  bool is_leaf(NodeId v) const { return child_begin_[v] == child_begin_[v + 1]; }

  /// Edges in node-id order of the child, for serialization.
  std::vector<TreeEdge> edges() const;

 private:
  friend TextTree build_tree(std::size_t, std::span<const TreeEdge>);

  std::vector<NodeId> parent_;
  std::vector<Symbol> label_;
  std::vector<std::size_t> child_begin_;
  std::vector<NodeId> child_list_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> height_;
  std::size_t max_depth_ = 0;
};

/// Validates and builds a tree over nodes 0..node_count-1.
///
/// Throws ValidationError (naming the node) on an out-of-range id, a node
/// given two parents, the root given a parent, a node without a parent, or a
/// parent cycle.
TextTree build_tree(std::size_t node_count, std::span<const TreeEdge> edges);

/// Same as above with node_count = edges.size() + 1.
TextTree build_tree(std::span<const TreeEdge> edges);

/// Heights D_u of every node by one post-order pass.
std::vector<std::size_t> compute_subtree_heights(const TextTree& tree);

/// Root-to-`v` path labels, root edge first.
Sequence path_labels(const TextTree& tree, NodeId v);

}  // namespace oppm

#endif  // OPPM_TREE_TEXT_HPP
