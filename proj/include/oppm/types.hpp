// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_TYPES_HPP
#define OPPM_TYPES_HPP

#include <cstdint>
#include <vector>

namespace oppm {

/// A character of the ordered alphabet. Only the relative order of
/// characters matters to every matcher in this library.
using Symbol = std::int64_t;

using Sequence = std::vector<Symbol>;

/// Counters of automaton transitions taken during one matching run.
struct MatchStats {
  std::uint64_t goto_count = 0;
  std::uint64_t fail_count = 0;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

}  // namespace oppm

#endif  // OPPM_TYPES_HPP
