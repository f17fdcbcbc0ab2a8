// SPDX-License-Identifier: Apache-2.0

#include "oppm/string_match.hpp"

namespace oppm {

StringMatchReport match_string(const PatternTables& tables,
                               std::span<const Symbol> text) {
  StringMatchReport report;
  const std::size_t m = tables.size();
  std::size_t state = 0;

  for (std::size_t j = 0; j < text.size(); ++j) {
    auto window = [&](std::size_t k) { return text[j - state + k]; };
    while (state > 0 && !extends(tables, state, window)) {
      ++report.stats.fail_count;
      state = tables.failure(state);
    }
    ++report.stats.goto_count;
    ++state;

    if (state == m) {
      report.end_positions.push_back(j + 1);
      ++report.stats.fail_count;
      state = tables.failure(state);
    }
  }
  return report;
}

}  // namespace oppm
