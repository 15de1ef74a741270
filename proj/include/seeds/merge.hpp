#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seeds/quasigap.hpp"
#include "seeds/range_engine.hpp"
#include "seeds/tree.hpp"

namespace seeds {

/// Path from v up to its proper ancestor u, u excluded.
struct WeightedPath {
  NodeId v;
  NodeId u;
  std::int64_t weight;
};

inline constexpr std::int64_t kUncovered = INT64_MIN;

struct PathStats {
  std::int64_t paths = 0;
  std::int64_t finds = 0;
  std::int64_t unions = 0;
};

/// For every node, the largest weight among paths through it (kUncovered if
/// none). `parent` describes a rooted tree with parent[root] == kNoNode and
/// parent[v] < v otherwise. Paths are taken by non-increasing weight and
/// every node is labelled on first contact; labelled nodes are merged into
/// their parent's set, so each walk skips straight to the next unlabelled
/// ancestor. Union by rank with path compression.
///
/// Throws std::invalid_argument if some u is not a proper ancestor of v.
std::vector<std::int64_t> tree_path_max(std::span<const NodeId> parent,
                                        std::span<const WeightedPath> paths,
                                        PathStats* stats = nullptr);

/// For every node, the sum of weights of paths through it: +w at v, -w at
/// u, then subtree sums. Same preconditions as tree_path_max.
std::vector<std::int64_t> tree_path_sum(std::span<const NodeId> parent,
                                        std::span<const WeightedPath> paths,
                                        PathStats* stats = nullptr);

/// Quasigaps of `parent` up to m from the quasigaps of the trees of its
/// working intervals. A node gets Exact(q) when its word occurs in every
/// child interval, its parent is shorter than m and the largest child value
/// q satisfies q <= min(m, |v|); every other node gets Above (> m).
/// `children[k]` must come from extract_subtrees(parent, ...) so that its
/// origins point into `parent`; `child_gaps[k]` holds its quasigaps.
std::vector<RestrictedValue> merge_small_quasigaps(const InducedTree& parent,
                                                   std::span<const InducedTree> children,
                                                   std::span<const QuasigapMap> child_gaps, Pos m,
                                                   PathStats* stats = nullptr);

}  // namespace seeds
