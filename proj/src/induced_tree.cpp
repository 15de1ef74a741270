#include "seeds/induced_tree.hpp"

#include <stdexcept>
#include <string>

namespace seeds {

InducedTree induce_root_tree(const TextIndex& index) {
  const Interval all = index.text().whole();
  const auto parts = std::span<const Interval>(&all, 1);
  return std::move(extract_subtrees(index.suffix_tree(), index.lca(), parts).front());
}

InducedTree induce_tree(const TextIndex& index, Interval lambda) {
  if (lambda.empty() || lambda.first < 1 || lambda.last > index.n()) {
    throw std::invalid_argument("induce_tree: interval outside the text");
  }
  const auto& sa = index.suffix_array();
  TreeBuilder builder(lambda, index.n(), index.suffix_tree().root(),
                      static_cast<std::size_t>(lambda.length()));
  Pos prev = 0;
  for (Pos r = 0; r <= index.n(); ++r) {
    const Pos p = sa.order[r];
    if (!lambda.contains(p)) continue;
    const Pos lcp = prev == 0 ? 0 : index.lce(prev, p);
    const NodeId leaf = index.suffix_tree().leaf_of(p);
    const NodeId o = prev == 0 ? kNoNode : index.lca().lca(index.suffix_tree().leaf_of(prev), leaf);
    builder.add_leaf(p, lcp, o, leaf);
    prev = p;
  }
  return std::move(builder).finish();
}

std::vector<InducedTree> extract_subtrees(const InducedTree& parent, const LcaIndex& lca,
                                          std::span<const Interval> parts,
                                          ExtractStats* stats) {
  const Interval gamma = parent.span();
  for (const Interval& l : parts) {
    if (l.empty() || !gamma.contains(l)) {
      throw std::invalid_argument("extract_subtrees: [" + std::to_string(l.first) + ".." +
                                  std::to_string(l.last) + "] is not inside [" +
                                  std::to_string(gamma.first) + ".." +
                                  std::to_string(gamma.last) + "]");
    }
  }
  const auto width = static_cast<std::size_t>(gamma.length());

  // Bucket the parts by position: members of position p are
  // owners[start[p] .. start[p+1]).
  std::vector<std::int32_t> start(width + 1, 0);
  for (const Interval& l : parts) {
    for (Pos p = l.first; p <= l.last; ++p) ++start[static_cast<std::size_t>(p - gamma.first) + 1];
  }
  for (std::size_t k = 0; k < width; ++k) start[k + 1] += start[k];
  std::vector<std::int32_t> owners(static_cast<std::size_t>(start[width]));
  {
    std::vector<std::int32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
      for (Pos p = parts[idx].first; p <= parts[idx].last; ++p) {
        owners[static_cast<std::size_t>(fill[static_cast<std::size_t>(p - gamma.first)]++)] =
            static_cast<std::int32_t>(idx);
      }
    }
  }

  std::vector<TreeBuilder> builders;
  builders.reserve(parts.size());
  for (const Interval& l : parts) {
    builders.emplace_back(l, parent.text_length(), parent.root(),
                          static_cast<std::size_t>(l.length()));
  }
  std::vector<NodeId> previous(parts.size(), kNoNode);

  for (NodeId leaf : parent.leaves()) {
    const Pos p = parent.leaf_pos(leaf);
    if (stats != nullptr) ++stats->leaf_visits;
    if (!gamma.contains(p)) continue;
    const auto k = static_cast<std::size_t>(p - gamma.first);
    for (std::int32_t at = start[k]; at < start[k + 1]; ++at) {
      const auto idx = static_cast<std::size_t>(owners[static_cast<std::size_t>(at)]);
      if (previous[idx] == kNoNode) {
        builders[idx].add_leaf(p, 0, kNoNode, leaf);
      } else {
        const NodeId x = lca.lca(previous[idx], leaf);
        builders[idx].add_leaf(p, parent.depth(x), x, leaf);
      }
      previous[idx] = leaf;
      if (stats != nullptr) ++stats->inserts;
    }
  }

  std::vector<InducedTree> out;
  out.reserve(parts.size());
  for (auto& b : builders) out.push_back(std::move(b).finish());
  return out;
}

}  // namespace seeds
