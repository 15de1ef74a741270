#include "seeds/quasigap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seeds {

Pos maxgap(std::span<const Pos> sorted) {
  Pos best = 0;
  for (std::size_t k = 1; k < sorted.size(); ++k) best = std::max(best, sorted[k] - sorted[k - 1]);
  return best;
}

std::int64_t quasigap_bound(Pos first, Pos last, Pos gap, Pos parent_len, Interval range) {
  const std::int64_t tail = (static_cast<std::int64_t>(range.last) - last + 1) / 2 + 1;
  return std::max({std::int64_t{gap}, std::int64_t{first} - range.first + 1, tail,
                   std::int64_t{parent_len} + 1});
}

Pos quasigap_formula(Pos first, Pos last, Pos gap, Pos parent_len, Interval range, Pos node_len,
                     Pos count) {
  if (count <= 0) return kInfiniteGap;
  const std::int64_t m = quasigap_bound(first, last, gap, parent_len, range);
  return m <= node_len ? static_cast<Pos>(m) : kInfiniteGap;
}

Pos quasigap_at_locus(Pos parent_len, Pos node_len, Pos len, Pos value) {
  if (len <= parent_len || len > node_len) {
    throw std::out_of_range("quasigap_at_locus: length " + std::to_string(len) +
                            " is not on the edge (" + std::to_string(parent_len) + ", " +
                            std::to_string(node_len) + "]");
  }
  return is_finite(value) && len >= value ? value : kInfiniteGap;
}

QuasigapMap brute_quasigaps(const InducedTree& tree) {
  const Interval range = tree.span();
  QuasigapMap out(static_cast<std::size_t>(tree.size()), kInfiniteGap);
  std::vector<Pos> occ;
  for (NodeId v = 1; v < tree.size(); ++v) {
    occ.clear();
    for (Pos r = tree.begin_leaf(v); r < tree.end_leaf(v); ++r) {
      occ.push_back(tree.leaf_pos(tree.leaves()[r]));
    }
    std::sort(occ.begin(), occ.end());
    out[v] = quasigap_formula(tree.first(v), tree.last(v), maxgap(occ),
                              tree.word_length(tree.parent(v)), range, tree.word_length(v),
                              tree.count(v));
  }
  return out;
}

}  // namespace seeds
