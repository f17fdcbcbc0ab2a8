// SPDX-License-Identifier: Apache-2.0

#include "oppm/tree_match.hpp"

#include <algorithm>
#include <string>

#include "oppm/error.hpp"
#include "oppm/string_match.hpp"

namespace oppm {
namespace {

struct Frame {
  NodeId node;
  std::size_t state;
  std::size_t next_child;
};

// True when a path of at most `room` more edges, entered in automaton state
// `state`, cannot complete an occurrence.
bool too_shallow(std::size_t room, std::size_t m, std::size_t state) {
  return room < m - state;
}

}  // namespace

TreeMatchReport match_tree(const PatternTables& tables, const TextTree& tree,
                           Pruning pruning) {
  TreeMatchReport report;
  const bool prune = pruning == Pruning::enabled;
  const std::size_t m = tables.size();

  if (prune && too_shallow(tree.subtree_height(0), m, 0)) return report;

  // labels[d] is the label of the edge entering the depth-d node of the
  // current root path.
  std::vector<Symbol> labels(tree.max_depth() + 1, 0);
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto kids = tree.children(top.node);
    if (top.next_child == kids.size()) {
      stack.pop_back();
      continue;
    }

    const NodeId v = kids[top.next_child++];
    const std::size_t dv = tree.depth(v);
    labels[dv] = tree.edge_label(v);

    // Edge u -> v plus the deepest path below v: the room left for the
    // m - state characters an occurrence still needs.
    const std::size_t room = tree.subtree_height(v) + 1;
    std::size_t state = top.state;
    if (prune && too_shallow(room, m, state)) continue;

    bool abandoned = false;
    for (;;) {
      auto window = [&](std::size_t k) { return labels[dv - state + k]; };
      if (state == 0 || extends(tables, state, window)) {
        ++report.stats.goto_count;
        ++state;
        break;
      }
      ++report.stats.fail_count;
      state = tables.failure(state);
      if (prune && too_shallow(room, m, state)) {
        abandoned = true;
        break;
      }
    }
    if (abandoned) continue;

    if (state == m) {
      report.matched_nodes.push_back(v);
      ++report.stats.fail_count;
      state = tables.failure(state);
    }

    if (tree.is_leaf(v)) continue;
    if (prune && too_shallow(tree.subtree_height(v), m, state)) continue;
    stack.push_back({v, state, 0});
  }

  // Already ascending when ids follow preorder, as generated trees do.
  auto& nodes = report.matched_nodes;
  if (!std::is_sorted(nodes.begin(), nodes.end())) std::sort(nodes.begin(), nodes.end());
  return report;
}

bool match_tree_on_path_equals_string(const PatternTables& tables,
                                      const TextTree& chain) {
  Sequence text;
  text.reserve(chain.max_depth());
  std::vector<NodeId> node_at_depth{0};
  for (NodeId v = 0; !chain.is_leaf(v);) {
    const auto kids = chain.children(v);
    if (kids.size() != 1) {
      throw InvalidInput("tree is not a chain at node " + std::to_string(v));
    }
    v = kids.front();
    text.push_back(chain.edge_label(v));
    node_at_depth.push_back(v);
  }

  const auto on_tree = match_tree(tables, chain).matched_nodes;
  const auto on_string = match_string(tables, text).end_positions;
  if (on_tree.size() != on_string.size()) return false;

  std::vector<NodeId> expected;
  expected.reserve(on_string.size());
  for (std::size_t pos : on_string) expected.push_back(node_at_depth[pos]);
  std::sort(expected.begin(), expected.end());
  return expected == on_tree;
}

}  // namespace oppm
