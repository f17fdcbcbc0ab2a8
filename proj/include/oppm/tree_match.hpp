// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_TREE_MATCH_HPP
#define OPPM_TREE_MATCH_HPP

#include <vector>

#include "oppm/op_core.hpp"
#include "oppm/tree_text.hpp"
#include "oppm/types.hpp"

namespace oppm {

struct TreeMatchReport {
  /// Nodes v whose last m root-path labels are order-isomorphic to the
  /// pattern, ascending.
  std::vector<NodeId> matched_nodes;
  MatchStats stats;
};

enum class Pruning { enabled, disabled };

/// Runs the order-preserving automaton over every root-to-node path of
/// `tree` in a single depth-first traversal.
///
/// The labels of the current root path are kept in an array indexed by
/// depth, so both comparison characters of an extension test are read in
/// O(1). Each node keeps the automaton state reached there; after an accept
/// the stored state is the failure target of the accepting state. The
/// traversal resumes from the stored state when it returns to a node.
///
/// With pruning, the failure chain on an edge u -> v stops once the edge plus
/// the deepest path below v is shorter than the number of pattern characters
/// still missing, and the traversal backtracks from v. Subtrees that cannot
/// hold a match end are not entered. A chain on that edge then costs at most
/// height(v) + 2 transitions, which keeps the total linear in the tree size.
/// Without pruning the chain runs to completion, which costs Theta(m N) on
/// some trees.
///
/// The reported node set does not depend on `pruning`.
TreeMatchReport match_tree(const PatternTables& tables, const TextTree& tree,
                           Pruning pruning = Pruning::enabled);

/// Bridges the tree matcher to the string matcher on a chain-shaped tree:
/// maps every matched node to its depth and compares with `match_string`
/// over the chain's labels. Throws InvalidInput if `chain` branches.
bool match_tree_on_path_equals_string(const PatternTables& tables,
                                      const TextTree& chain);

}  // namespace oppm

#endif  // OPPM_TREE_MATCH_HPP
