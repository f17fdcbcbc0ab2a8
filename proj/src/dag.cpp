// SPDX-License-Identifier: Apache-2.0

#include "oppm/dag.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "oppm/error.hpp"

namespace oppm {

TextDag::TextDag(std::size_t vertex_count, std::vector<DagEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::vector<std::size_t> indegree(vertex_count_, 0);
  out_begin_.assign(vertex_count_ + 1, 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const DagEdge& e = edges_[k];
    for (VertexId v : {e.source, e.target}) {
      if (v >= vertex_count_) {
        throw ValidationError("unknown vertex id " + std::to_string(v), v, k);
      }
    }
    ++out_begin_[e.source + 1];
    ++indegree[e.target];
  }
  std::partial_sum(out_begin_.begin(), out_begin_.end(), out_begin_.begin());

  out_list_.resize(edges_.size());
  std::vector<std::size_t> fill(out_begin_.begin(), out_begin_.end() - 1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out_list_[fill[edges_[k].source]++] = k;
  }
  for (VertexId v = 0; v < vertex_count_; ++v) {
    std::sort(out_list_.begin() + out_begin_[v],
              out_list_.begin() + out_begin_[v + 1],
              [this](std::size_t a, std::size_t b) {
                const DagEdge& x = edges_[a];
                const DagEdge& y = edges_[b];
                if (x.target != y.target) return x.target < y.target;
                if (x.label != y.label) return x.label < y.label;
                return a < b;
              });
  }

  // Kahn's algorithm.
  topo_.reserve(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (indegree[v] == 0) topo_.push_back(v);
  }
  for (std::size_t head = 0; head < topo_.size(); ++head) {
    for (std::size_t k : out_edges(topo_[head])) {
      if (--indegree[edges_[k].target] == 0) topo_.push_back(edges_[k].target);
    }
  }
  if (topo_.size() != vertex_count_) {
    // Every vertex left over has an unprocessed predecessor, so walking
    // predecessors from any of them must revisit a vertex: that closes a
    // cycle, and its last edge is reported.
    std::vector<std::size_t> pred_edge(vertex_count_, ValidationError::kNoEdge);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (indegree[edges_[k].source] > 0 && indegree[edges_[k].target] > 0) {
        pred_edge[edges_[k].target] = k;
      }
    }
    VertexId v = 0;
    while (indegree[v] == 0) ++v;
    std::vector<bool> on_walk(vertex_count_, false);
    while (!on_walk[v]) {
      on_walk[v] = true;
      v = edges_[pred_edge[v]].source;
    }
    const std::size_t k = pred_edge[v];
    throw ValidationError("cycle through edge " + std::to_string(edges_[k].source) +
                              " -> " + std::to_string(edges_[k].target),
                          edges_[k].source, k);
  }

  longest_.assign(vertex_count_, 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    for (std::size_t k : out_edges(*it)) {
      longest_[*it] = std::max(longest_[*it], longest_[edges_[k].target] + 1);
    }
  }
}

std::size_t TextDag::longest_path() const noexcept {
  return longest_.empty() ? 0 : *std::max_element(longest_.begin(), longest_.end());
}

TextDag build_dasg(std::span<const Symbol> t) {
  std::vector<DagEdge> edges;
  std::unordered_map<Symbol, std::size_t> last_seen;
  for (std::size_t j = 1; j <= t.size(); ++j) {
    const Symbol c = t[j - 1];
    const auto it = last_seen.find(c);
    const std::size_t first_source = it == last_seen.end() ? 0 : it->second;
    for (std::size_t i = first_source; i < j; ++i) edges.push_back({i, c, j});
    last_seen[c] = j;
  }
  return TextDag(t.size() + 1, std::move(edges));
}

namespace {

class DagSearch {
 public:
  DagSearch(const PatternTables& tables, const TextDag& dag)
      : tables_(tables), dag_(dag) {}

  DagMatchResult run() {
    const std::size_t m = tables_.size();
    for (VertexId s = 0; s < dag_.vertex_count(); ++s) {
      if (dag_.longest_path_from(s) < m) continue;
      vertices_.assign(1, s);
      labels_.clear();
      if (extend_from(s)) {
        result_.witness = DagWitness{vertices_, labels_};
        break;
      }
    }
    return std::move(result_);
  }

 private:
  // Invariant: labels_ is order-isomorphic to the pattern prefix of the same
  // length and ends at `v`.
  bool extend_from(VertexId v) {
    const std::size_t i = labels_.size();
    if (i == tables_.size()) return true;

    for (std::size_t k : dag_.out_edges(v)) {
      const DagEdge& e = dag_.edges()[k];
      if (dag_.longest_path_from(e.target) + i + 1 < tables_.size()) continue;
      ++result_.explored;
      labels_.push_back(e.label);
      if (extends(tables_, labels_)) {
        vertices_.push_back(e.target);
        if (extend_from(e.target)) return true;
        vertices_.pop_back();
      }
      labels_.pop_back();
    }
    return false;
  }

  const PatternTables& tables_;
  const TextDag& dag_;
  std::vector<VertexId> vertices_;
  Sequence labels_;
  DagMatchResult result_;
};

}  // namespace

DagMatchResult match_dag(const PatternTables& tables, const TextDag& dag) {
  return DagSearch(tables, dag).run();
}

bool opsm(std::span<const Symbol> p, std::span<const Symbol> t) {
  if (t.size() < p.size()) return false;
  return match_dag(PatternTables(Sequence(p.begin(), p.end())), build_dasg(t))
      .witness.has_value();
}

}  // namespace oppm
