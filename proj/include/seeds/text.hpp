#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seeds {

/// Positions into the text are 1-based, matching the usual stringology
/// convention; 0 and n+1 act as "before" / "after" sentinels.
using Pos = std::int32_t;
using Symbol = std::int32_t;

/// Closed interval [first..last] of text positions.
struct Interval {
  Pos first = 1;
  Pos last = 0;

  [[nodiscard]] constexpr Pos length() const noexcept { return last - first + 1; }
  [[nodiscard]] constexpr bool empty() const noexcept { return last < first; }
  [[nodiscard]] constexpr bool contains(Pos p) const noexcept {
    return first <= p && p <= last;
  }
  [[nodiscard]] constexpr bool contains(Interval o) const noexcept {
    return first <= o.first && o.last <= last;
  }
  friend constexpr bool operator==(Interval, Interval) = default;
};

class TextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input word over an integer alphabet. Symbols are non-negative; the end
/// marker used by the suffix structures is handled internally and never
/// appears here.
class Text {
 public:
  Text() = default;
  explicit Text(std::vector<Symbol> symbols);

  static Text from_bytes(std::string_view bytes);

  [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(sym_.size()); }
  [[nodiscard]] bool empty() const noexcept { return sym_.empty(); }

  /// 1-based access.
  [[nodiscard]] Symbol operator[](Pos p) const noexcept { return sym_[p - 1]; }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return sym_; }
  [[nodiscard]] Symbol alphabet_bound() const noexcept { return bound_; }
  [[nodiscard]] Interval whole() const noexcept { return {1, size()}; }

  /// Renders w[p..p+len-1]; bytes are printed verbatim when every symbol is
  /// below 256, otherwise as space separated integers.
  [[nodiscard]] std::string render(Pos p, Pos len) const;
  [[nodiscard]] bool is_byte_text() const noexcept { return bound_ <= 256; }

 private:
  std::vector<Symbol> sym_;
  Symbol bound_ = 0;
};

}  // namespace seeds
