// SPDX-License-Identifier: Apache-2.0

#include "oppm/oracles.hpp"

#include <functional>
#include <string>

#include "oppm/error.hpp"

namespace oppm::oracle {

bool naive_isomorphic(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if ((x[i] <= x[j]) != (y[i] <= y[j])) return false;
    }
  }
  return true;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> naive_lmax_lmin(
    std::span<const Symbol> x) {
  std::vector<std::size_t> lmax(x.size(), 0);
  std::vector<std::size_t> lmin(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      // ">=" on the stored value keeps the rightmost of equal candidates.
      if (x[k] <= x[i] && (lmax[i] == 0 || x[k] >= x[lmax[i] - 1])) {
        lmax[i] = k + 1;
      }
      if (x[k] >= x[i] && (lmin[i] == 0 || x[k] <= x[lmin[i] - 1])) {
        lmin[i] = k + 1;
      }
    }
  }
  return {lmax, lmin};
}

std::vector<std::size_t> naive_border(std::span<const Symbol> p) {
  std::vector<std::size_t> border(p.size(), 0);
  for (std::size_t len = 2; len <= p.size(); ++len) {
    for (std::size_t j = len - 1; j > 0; --j) {
      if (naive_isomorphic(p.subspan(0, j), p.subspan(len - j, j))) {
        border[len - 1] = j;
        break;
      }
    }
  }
  return border;
}

std::vector<std::size_t> naive_match_string(std::span<const Symbol> p,
                                            std::span<const Symbol> t) {
  std::vector<std::size_t> ends;
  if (p.empty()) return ends;
  for (std::size_t end = p.size(); end <= t.size(); ++end) {
    if (naive_isomorphic(p, t.subspan(end - p.size(), p.size()))) {
      ends.push_back(end);
    }
  }
  return ends;
}

std::vector<NodeId> naive_match_tree(std::span<const Symbol> p,
                                     const TextTree& tree) {
  std::vector<NodeId> nodes;
  if (p.empty()) return nodes;
  Sequence window(p.size());
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.depth(v) < p.size()) continue;
    NodeId w = v;
    for (std::size_t k = p.size(); k > 0; --k) {
      window[k - 1] = tree.edge_label(w);
      w = tree.parent(w);
    }
    if (naive_isomorphic(p, window)) nodes.push_back(v);
  }
  return nodes;
}

bool naive_opsm(std::span<const Symbol> p, std::span<const Symbol> t) {
  if (t.size() > kMaxOpsmText) {
    throw SizeGuardError("naive_opsm refuses texts longer than " +
                         std::to_string(kMaxOpsmText));
  }
  const std::size_t m = p.size();
  if (m > t.size()) return false;

  Sequence chosen;
  chosen.reserve(m);
  // Every increasing index tuple of size m.
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (chosen.size() == m) return naive_isomorphic(p, chosen);
    for (std::size_t i = from; i + (m - chosen.size()) <= t.size(); ++i) {
      chosen.push_back(t[i]);
      if (pick(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

bool naive_match_graph(std::span<const Symbol> p, std::size_t vertex_count,
                       std::span<const LabeledArc> arcs) {
  const std::size_t m = p.size();
  Sequence labels;
  std::function<bool(std::size_t)> walk = [&](std::size_t v) {
    if (labels.size() == m) return naive_isomorphic(p, labels);
    for (const LabeledArc& a : arcs) {
      if (a.source != v) continue;
      labels.push_back(a.label);
      if (walk(a.target)) return true;
      labels.pop_back();
    }
    return false;
  };
  for (std::size_t s = 0; s < vertex_count; ++s) {
    labels.clear();
    if (walk(s)) return true;
  }
  return false;
}

}  // namespace oppm::oracle
