#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seeds/text_index.hpp"
#include "seeds/tree.hpp"

namespace seeds {

/// T([1..n]): the suffix tree with the bare end-marker leaf removed. Node
/// origins refer to the suffix tree of `index`.
InducedTree induce_root_tree(const TextIndex& index);

/// T(lambda) for an arbitrary interval, straight from the suffix array.
/// Costs O(n); used by the standalone queries and as a reference path.
InducedTree induce_tree(const TextIndex& index, Interval lambda);

/// Work counters for the extraction step.
struct ExtractStats {
  std::int64_t leaf_visits = 0;  // leaves of the parent tree scanned
  std::int64_t inserts = 0;      // leaves inserted across all output trees
};

/// Builds T(lambda) for every lambda in `parts` from T(gamma) in
/// O(|gamma| + sum |lambda|): one bucket pass over gamma's leaves in
/// left-to-right order, then rightmost-path insertion using LCAs in the
/// parent. Output node origins point at nodes of `parent`.
///
/// Throws std::invalid_argument if some lambda is empty or not inside
/// parent.span().
std::vector<InducedTree> extract_subtrees(const InducedTree& parent, const LcaIndex& lca,
                                          std::span<const Interval> parts,
                                          ExtractStats* stats = nullptr);

}  // namespace seeds
