// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_ORACLES_HPP
#define OPPM_ORACLES_HPP

// Brute-force reference implementations, written straight from the
// definitions. Nothing here calls into the fast matchers; keep it that way,
// agreement between the two is only meaningful if the code paths are
// independent.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "oppm/tree_text.hpp"
#include "oppm/types.hpp"

namespace oppm::oracle {

/// Longest text accepted by naive_opsm.
inline constexpr std::size_t kMaxOpsmText = 20;

/// Checks x[i] <= x[j] <=> y[i] <= y[j] over all index pairs.
bool naive_isomorphic(std::span<const Symbol> x, std::span<const Symbol> y);

/// Lmax/Lmin by scanning every earlier position (1-based values, 0 = none).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> naive_lmax_lmin(
    std::span<const Symbol> x);

/// Border array by testing every candidate border length.
std::vector<std::size_t> naive_border(std::span<const Symbol> p);

/// 1-based end positions of every isomorphic window, ascending.
std::vector<std::size_t> naive_match_string(std::span<const Symbol> p,
                                            std::span<const Symbol> t);

/// Nodes whose last |p| root-path labels are isomorphic to p, ascending.
std::vector<NodeId> naive_match_tree(std::span<const Symbol> p,
                                     const TextTree& tree);

/// Whether some length-|p| subsequence of t is isomorphic to p.
/// Throws SizeGuardError when |t| > kMaxOpsmText.
bool naive_opsm(std::span<const Symbol> p, std::span<const Symbol> t);

/// Whether some path of |p| edges, given as (source, target, label) triples
/// over `vertex_count` vertices, carries labels isomorphic to p. Enumerates
/// every path; the caller bounds the input size.
struct LabeledArc {
  std::size_t source;
  std::size_t target;
  Symbol label;
};
bool naive_match_graph(std::span<const Symbol> p, std::size_t vertex_count,
                       std::span<const LabeledArc> arcs);

}  // namespace oppm::oracle

#endif  // OPPM_ORACLES_HPP
