// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_DAG_HPP
#define OPPM_DAG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oppm/op_core.hpp"
#include "oppm/types.hpp"

namespace oppm {

using VertexId = std::size_t;

struct DagEdge {
  VertexId source;
  Symbol label;
  VertexId target;

  friend bool operator==(const DagEdge&, const DagEdge&) = default;
};

/// Edge-labeled directed acyclic graph. Parallel edges are allowed.
class TextDag {
 public:
  /// Throws ValidationError on an out-of-range endpoint or a cycle; the
  /// error names a vertex on the offending edge.
  TextDag(std::size_t vertex_count, std::vector<DagEdge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::span<const DagEdge> edges() const noexcept { return edges_; }

  /// Indices into edges() leaving `v`, sorted by (target, label, index).
  std::span<const std::size_t> out_edges(VertexId v) const {
    return {out_list_.data() + out_begin_[v], out_begin_[v + 1] - out_begin_[v]};
  }

  /// A topological order of all vertices.
  std::span<const VertexId> topological_order() const noexcept {
    return topo_;
  }

  /// Number of edges on the longest path starting at `v`.
  std::size_t longest_path_from(VertexId v) const { return longest_[v]; }

  /// Number of edges on the longest path in the graph.
  std::size_t longest_path() const noexcept;

 private:
  std::size_t vertex_count_;
  std::vector<DagEdge> edges_;
  std::vector<std::size_t> out_begin_;
  std::vector<std::size_t> out_list_;
  std::vector<VertexId> topo_;
  std::vector<std::size_t> longest_;
};

/// Directed acyclic subsequence graph of `t`: vertices v_0..v_n and an edge
/// (v_i, t[j], v_j) whenever t[j] does not occur strictly between positions
/// i and j. Paths from v_0 spell exactly the subsequences of `t`.
TextDag build_dasg(std::span<const Symbol> t);

/// A path whose edge labels are order-isomorphic to the pattern.
struct DagWitness {
  std::vector<VertexId> vertices;  // m + 1 vertices
  Sequence labels;                 // m labels
};

struct DagMatchResult {
  std::optional<DagWitness> witness;
  /// Number of edge extensions attempted by the search.
  std::uint64_t explored = 0;
};

/// Backtracking search for any path whose labels are order-isomorphic to
/// the pattern. Start vertices are tried in increasing id order and edges in
/// out_edges() order, so the witness is the first in that order. Vertices
/// whose longest outgoing path is too short are skipped. Exponential in the
/// worst case.
DagMatchResult match_dag(const PatternTables& tables, const TextDag& dag);

/// Order-preserving subsequence matching through the DASG of `t`.
bool opsm(std::span<const Symbol> p, std::span<const Symbol> t);

}  // namespace oppm

#endif  // OPPM_DAG_HPP
