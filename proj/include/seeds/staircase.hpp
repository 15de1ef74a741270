#pragma once

#include <cstdint>
#include <vector>

#include "seeds/factorization.hpp"
#include "seeds/text.hpp"

namespace seeds {

/// Exact ratio num/den, so floor(c * N) never depends on rounding.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;
  [[nodiscard]] constexpr Pos floor_times(std::int64_t x) const noexcept {
    return static_cast<Pos>(num * x / den);
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Recursion parameters: intervals of length <= n0 are solved by brute
/// force; delta = floor(c1 * N) and m = floor(c2 * N / g).
struct Constants {
  Pos n0 = 200;
  Ratio c1{1, 50};
  Ratio c2{1, 50};

  static constexpr Constants release() { return {}; }

  [[nodiscard]] Pos delta(Pos n) const noexcept { return c1.floor_times(n); }
  /// 0 when g == 0.
  [[nodiscard]] Pos step(Pos n, Pos g) const noexcept {
    return g == 0 ? 0 : static_cast<Pos>(c2.num * n / (c2.den * g));
  }
  friend bool operator==(const Constants&, const Constants&) = default;
};

/// Intervals [i-1+k*m+1 .. min(i-1+(k+3)*m, j)] for k = 0..max(0, ceil(N/m)-3).
/// Consecutive intervals overlap in 2m positions and the last one ends at j.
/// Throws std::invalid_argument when m < 1 or range is empty.
std::vector<Interval> build_staircase(Interval range, Pos m);

enum class TailPolicy {
  /// Judge every interval on w[a..min(b+m, j)].
  Clamp,
  /// Also keep intervals whose extension b+m runs past j: their quasigaps
  /// depend on letters after the range, which the factorization of the
  /// range knows nothing about.
  KeepTail,
};

/// Keeps the intervals [a..b] of `stairs` whose extension w[a..b+m] (clamped
/// to range.last) touches more than one factor. `factors` must factorize
/// `range`.
std::vector<Interval> reduce_staircase(const std::vector<Interval>& stairs,
                                       const Factorization& factors, Pos m, Interval range,
                                       TailPolicy policy = TailPolicy::KeepTail);

/// Sum of interval lengths.
std::int64_t total_length(const std::vector<Interval>& intervals);

}  // namespace seeds
