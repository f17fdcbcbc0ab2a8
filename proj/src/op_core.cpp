// SPDX-License-Identifier: Apache-2.0

#include "oppm/op_core.hpp"

#include <iterator>
#include <limits>
#include <set>

#include "oppm/error.hpp"

namespace oppm {

RankTables compute_lmax_lmin(std::span<const Symbol> p) {
  if (p.empty()) throw InvalidInput("pattern must be non-empty");

  const std::size_t m = p.size();
  RankTables ranks{std::vector<std::size_t>(m, 0),
                   std::vector<std::size_t>(m, 0)};

  // Earlier positions keyed by (value, position); for equal values the
  // largest position sorts last, which is the rightmost tie.
  using Key = std::pair<Symbol, std::size_t>;
  constexpr auto kMaxPos = std::numeric_limits<std::size_t>::max();
  std::set<Key> seen;

  for (std::size_t i = 0; i < m; ++i) {
    const Symbol v = p[i];

    auto after = seen.upper_bound(Key{v, kMaxPos});
    if (after != seen.begin()) ranks.lmax[i] = std::prev(after)->second;

    auto at_least = seen.lower_bound(Key{v, 0});
    if (at_least != seen.end()) {
      const Symbol smallest = at_least->first;
      ranks.lmin[i] = std::prev(seen.upper_bound(Key{smallest, kMaxPos}))->second;
    }

    seen.emplace(v, i + 1);
  }
  return ranks;
}

std::vector<std::size_t> compute_border_array(std::span<const Symbol> p,
                                              const RankTables& ranks) {
  const std::size_t m = p.size();
  std::vector<std::size_t> border(m, 0);

  std::size_t k = 0;
  for (std::size_t i = 1; i < m; ++i) {
    // Window p[i-k..i] is matched against the prefix p[0..k].
    auto window = [&](std::size_t off) { return p[i - k + off]; };
    while (k > 0 && !detail::extends_with(ranks.lmax, ranks.lmin, k, window)) {
      k = border[k - 1];
    }
    ++k;
    border[i] = k;
  }
  return border;
}

PatternTables::PatternTables(Sequence p) : values_(std::move(p)) {
  auto ranks = compute_lmax_lmin(values_);
  border_ = compute_border_array(values_, ranks);
  lmax_ = std::move(ranks.lmax);
  lmin_ = std::move(ranks.lmin);
}

bool op_isomorphic(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;

  const auto ranks = compute_lmax_lmin(x);
  auto window = [y](std::size_t k) { return y[k]; };
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!detail::extends_with(ranks.lmax, ranks.lmin, i, window)) return false;
  }
  return true;
}

}  // namespace oppm
