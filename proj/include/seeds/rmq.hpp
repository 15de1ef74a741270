#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace seeds {

/// Range-minimum index over a borrowed array, O(n) preprocessing and O(1)
/// queries. Blocks of 64 entries answer in-block queries through a per-entry
/// bitmask of the monotone stack; a sparse table over block minima covers
/// the rest. `Better(a, b)` is true when a should win over b (std::less for
/// minima, std::greater for maxima). Ties resolve to the leftmost index.
///
/// The referenced array must outlive the structure.
template <class T, class Better = std::less<T>>
class RangeArgOpt {
 public:
  RangeArgOpt() = default;

  explicit RangeArgOpt(std::span<const T> values) : v_(values) {
    const std::size_t n = v_.size();
    mask_.assign(n, 0);
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::uint32_t> block_best(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t lo = b * kBlock;
      const std::size_t hi = std::min(n, lo + kBlock);
      std::uint64_t stack = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        while (stack != 0) {
          const std::size_t top = lo + (63 - std::countl_zero(stack));
          if (better_(v_[i], v_[top])) {
            stack &= ~(std::uint64_t{1} << (top - lo));
          } else {
            break;
          }
        }
        stack |= std::uint64_t{1} << (i - lo);
        mask_[i] = stack;
      }
      block_best[b] = static_cast<std::uint32_t>(lo + std::countr_zero(mask_[hi - 1]));
    }
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) <= blocks) ++levels;
    table_.assign(levels, {});
    table_[0] = std::move(block_best);
    for (std::size_t k = 1; k < levels; ++k) {
      const std::size_t span = std::size_t{1} << k;
      auto& row = table_[k];
      const auto& prev = table_[k - 1];
      row.resize(blocks - span + 1);
      for (std::size_t b = 0; b + span <= blocks; ++b) {
        row[b] = pick(prev[b], prev[b + span / 2]);
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }

  /// Index of the best value in [lo, hi] (0-based, inclusive).
  [[nodiscard]] std::size_t query(std::size_t lo, std::size_t hi) const {
    assert(lo <= hi && hi < v_.size());
    const std::size_t bl = lo / kBlock;
    const std::size_t bh = hi / kBlock;
    if (bl == bh) return in_block(lo, hi);
    std::size_t best = in_block(lo, bl * kBlock + kBlock - 1);
    best = pick(best, in_block(bh * kBlock, hi));
    if (bl + 1 < bh) {
      const std::size_t a = bl + 1;
      const std::size_t count = bh - a;
      const std::size_t k = static_cast<std::size_t>(std::bit_width(count)) - 1;
      best = pick(best, table_[k][a]);
      best = pick(best, table_[k][bh - (std::size_t{1} << k)]);
    }
    return best;
  }

  [[nodiscard]] const T& value(std::size_t lo, std::size_t hi) const {
    return v_[query(lo, hi)];
  }

 private:
  static constexpr std::size_t kBlock = 64;

  [[nodiscard]] std::size_t in_block(std::size_t lo, std::size_t hi) const {
    const std::size_t base = lo - lo % kBlock;
    const std::uint64_t m = mask_[hi] & (~std::uint64_t{0} << (lo - base));
    return base + static_cast<std::size_t>(std::countr_zero(m));
  }

  [[nodiscard]] std::size_t pick(std::size_t a, std::size_t b) const {
    if (better_(v_[b], v_[a])) return b;
    if (better_(v_[a], v_[b])) return a;
    return std::min(a, b);
  }

  std::span<const T> v_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::vector<std::uint32_t>> table_;
  [[no_unique_address]] Better better_{};
};

template <class T>
using RangeMin = RangeArgOpt<T, std::less<T>>;
template <class T>
using RangeMax = RangeArgOpt<T, std::greater<T>>;

}  // namespace seeds
