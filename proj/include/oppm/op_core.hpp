// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_OP_CORE_HPP
#define OPPM_OP_CORE_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "oppm/types.hpp"

namespace oppm {

/// Per-position predecessor tables of a string.
///
/// Arrays are indexed by 0-based position, but the stored values follow the
/// 1-based convention: `lmax[i] == j > 0` names position j (that is, element
/// `x[j - 1]`), and 0 means "no such position".
///
/// `lmax[i]` is the rightmost position k < i + 1 holding the largest value
/// `<= x[i]`; `lmin[i]` is the rightmost position holding the smallest value
/// `>= x[i]`.
struct RankTables {
  std::vector<std::size_t> lmax;
  std::vector<std::size_t> lmin;
};

/// Builds the Lmax/Lmin tables in O(m log m) with an ordered set.
/// Throws InvalidInput on an empty string.
RankTables compute_lmax_lmin(std::span<const Symbol> p);

/// Compiled pattern: the values plus the Lmax/Lmin and order-preserving
/// border arrays.
///
/// Together these encode the Morris-Pratt style automaton used by every
/// matcher: state `s` is the number of pattern characters matched, the goto
/// transition out of `s` is `extends(tables, s, window)`, and the failure
/// transition out of `s >= 1` leads to `failure(s)`.
///
/// Immutable after construction.
class PatternTables {
 public:
  /// Throws InvalidInput if `p` is empty.
  explicit PatternTables(Sequence p);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Symbol> values() const noexcept { return values_; }
  std::span<const std::size_t> lmax() const noexcept { return lmax_; }
  std::span<const std::size_t> lmin() const noexcept { return lmin_; }

  /// `border()[i]` is the length of the longest proper order-preserving
  /// border of the prefix of length i + 1.
  std::span<const std::size_t> border() const noexcept { return border_; }

  /// Failure target of state `s` (1 <= s <= m).
  std::size_t failure(std::size_t s) const noexcept { return border_[s - 1]; }

 private:
  Sequence values_;
  std::vector<std::size_t> lmax_;
  std::vector<std::size_t> lmin_;
  std::vector<std::size_t> border_;
};

namespace detail {

template <class Window>
bool extends_with(std::span<const std::size_t> lmax,
                  std::span<const std::size_t> lmin, std::size_t i,
                  Window&& y) {
  const std::size_t a = lmax[i];
  const std::size_t b = lmin[i];
  const Symbol next = y(i);
  const bool above_max = a == 0 || y(a - 1) < next;
  const bool below_min = b == 0 || next < y(b - 1);
  return above_max == below_min;
}

}  // namespace detail

/// Decides whether a window already order-isomorphic to the pattern on its
/// first `i` characters stays isomorphic after appending its character `i`.
///
/// `y(k)` must return the window character at 0-based offset k for
/// k in [0, i]. The caller guarantees `p[0..i) ~ y[0..i)` and `i < m`.
/// A missing Lmax (Lmin) entry makes the corresponding condition true.
template <class Window>
bool extends(const PatternTables& tables, std::size_t i, Window&& y) {
  return detail::extends_with(tables.lmax(), tables.lmin(), i, y);
}

/// Span form of `extends`: `window` holds exactly i + 1 characters.
inline bool extends(const PatternTables& tables,
                    std::span<const Symbol> window) {
  return extends(tables, window.size() - 1,
                 [window](std::size_t k) { return window[k]; });
}

/// Order-preserving border array computed by self-matching the pattern.
std::vector<std::size_t> compute_border_array(std::span<const Symbol> p,
                                              const RankTables& ranks);

/// True iff `x` and `y` have equal length and identical relative orders.
bool op_isomorphic(std::span<const Symbol> x, std::span<const Symbol> y);

}  // namespace oppm

#endif  // OPPM_OP_CORE_HPP
