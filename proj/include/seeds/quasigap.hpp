#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seeds/text.hpp"
#include "seeds/tree.hpp"

namespace seeds {

/// Quasigap of a class without quasiseeds. Larger than every text length,
/// so min/max treat it as absorbing.
inline constexpr Pos kInfiniteGap = INT32_MAX;

[[nodiscard]] constexpr bool is_finite(Pos q) noexcept { return q != kInfiniteGap; }

/// Per-node quasigaps of an InducedTree, indexed by node id.
using QuasigapMap = std::vector<Pos>;

/// Largest difference of consecutive entries; 0 for fewer than two.
Pos maxgap(std::span<const Pos> sorted);

/// max(maxgap, first - i + 1, ceil((j - last) / 2) + 1, parent_len + 1),
/// the value the quasigap takes when it does not exceed node_len.
std::int64_t quasigap_bound(Pos first, Pos last, Pos gap, Pos parent_len, Interval range);

/// quasigap_bound if it is at most node_len, else kInfiniteGap. An empty
/// occurrence set (count == 0) gives kInfiniteGap.
Pos quasigap_formula(Pos first, Pos last, Pos gap, Pos parent_len, Interval range, Pos node_len,
                     Pos count = 1);

/// Quasigap of the implicit node at length `len` on the edge into a node
/// with word length node_len, parent length parent_len and quasigap `value`.
/// Throws std::out_of_range unless parent_len < len <= node_len.
Pos quasigap_at_locus(Pos parent_len, Pos node_len, Pos len, Pos value);

/// Quasigaps of every node of `tree` evaluated directly from sorted
/// occurrence lists. Quadratic; meant for small trees.
QuasigapMap brute_quasigaps(const InducedTree& tree);

}  // namespace seeds
