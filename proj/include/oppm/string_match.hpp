// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_STRING_MATCH_HPP
#define OPPM_STRING_MATCH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "oppm/op_core.hpp"
#include "oppm/types.hpp"

namespace oppm {

struct StringMatchReport {
  /// 1-based end positions i with p ~ t[i-m+1..i], ascending.
  std::vector<std::size_t> end_positions;
  MatchStats stats;
};

/// Runs the order-preserving Morris-Pratt automaton over `text`.
/// Overlapping occurrences are all reported; after an accept the failure
/// transition of the accepting state is taken and counted.
StringMatchReport match_string(const PatternTables& tables,
                               std::span<const Symbol> text);

}  // namespace oppm

#endif  // OPPM_STRING_MATCH_HPP
