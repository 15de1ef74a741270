#include "seeds/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace seeds {

std::vector<Interval> build_staircase(Interval range, Pos m) {
  if (m < 1) throw std::invalid_argument("build_staircase: step must be positive");
  if (range.empty()) throw std::invalid_argument("build_staircase: empty range");
  const Pos n = range.length();
  const Pos last_k = std::max<Pos>(0, (n + m - 1) / m - 3);
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(last_k) + 1);
  for (Pos k = 0; k <= last_k; ++k) {
    const std::int64_t hi = static_cast<std::int64_t>(range.first) - 1 + std::int64_t{k + 3} * m;
    out.push_back({range.first + k * m, static_cast<Pos>(std::min<std::int64_t>(hi, range.last))});
  }
  return out;
}

std::vector<Interval> reduce_staircase(const std::vector<Interval>& stairs,
                                       const Factorization& factors, Pos m, Interval range,
                                       TailPolicy policy) {
  // factor index of every position in range
  std::vector<std::int32_t> owner(static_cast<std::size_t>(range.length()));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (Pos p = factors[f].start; p <= factors[f].end(); ++p) {
      owner[static_cast<std::size_t>(p - range.first)] = static_cast<std::int32_t>(f);
    }
  }
  std::vector<Interval> out;
  for (const Interval& l : stairs) {
    const std::int64_t ext = static_cast<std::int64_t>(l.last) + m;
    if (policy == TailPolicy::KeepTail && ext > range.last) {
      out.push_back(l);
      continue;
    }
    const Pos end = static_cast<Pos>(std::min<std::int64_t>(ext, range.last));
    if (owner[static_cast<std::size_t>(l.first - range.first)] !=
        owner[static_cast<std::size_t>(end - range.first)]) {
      out.push_back(l);
    }
  }
  return out;
}

std::int64_t total_length(const std::vector<Interval>& intervals) {
  std::int64_t sum = 0;
  for (const Interval& l : intervals) sum += l.length();
  return sum;
}

}  // namespace seeds
