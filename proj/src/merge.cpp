#include "seeds/merge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seeds {
namespace {

// Entry and exit times for ancestor tests on a parent array.
class Ancestry {
 public:
  explicit Ancestry(std::span<const NodeId> parent) {
    const auto n = static_cast<NodeId>(parent.size());
    std::vector<std::int32_t> size(parent.size(), 1);
    for (NodeId v = n - 1; v > 0; --v) {
      if (parent[v] == kNoNode || parent[v] >= v) {
        throw std::invalid_argument("tree path: parent[" + std::to_string(v) +
                                    "] must precede the node");
      }
      size[parent[v]] += size[v];
    }
    // lay subtrees out contiguously: a child starts after its earlier siblings
    tin_.assign(parent.size(), 0);
    std::vector<std::int32_t> next(parent.size(), 0);
    for (NodeId v = 0; v < n; ++v) {
      if (v > 0) {
        const NodeId p = parent[v];
        tin_[v] = tin_[p] + 1 + next[p];
        next[p] += size[v];
      }
    }
    size_ = std::move(size);
  }

  [[nodiscard]] bool proper_ancestor(NodeId u, NodeId v) const {
    return u != v && tin_[u] <= tin_[v] && tin_[v] < tin_[u] + size_[u];
  }

 private:
  std::vector<std::int32_t> tin_;
  std::vector<std::int32_t> size_;
};

void check_paths(std::span<const NodeId> parent, std::span<const WeightedPath> paths) {
  const Ancestry anc(parent);
  const auto n = static_cast<NodeId>(parent.size());
  for (const auto& p : paths) {
    if (p.v < 0 || p.v >= n || p.u < 0 || p.u >= n || !anc.proper_ancestor(p.u, p.v)) {
      throw std::invalid_argument("tree path: " + std::to_string(p.u) +
                                  " is not a proper ancestor of " + std::to_string(p.v));
    }
  }
}

class TopUnionFind {
 public:
  TopUnionFind(std::size_t n, PathStats* stats) : up_(n), rank_(n, 0), top_(n), stats_(stats) {
    std::iota(up_.begin(), up_.end(), 0);
    std::iota(top_.begin(), top_.end(), 0);
  }

  NodeId find(NodeId x) {
    if (stats_ != nullptr) ++stats_->finds;
    NodeId r = x;
    while (up_[r] != r) r = up_[r];
    while (up_[x] != r) {
      const NodeId next = up_[x];
      up_[x] = r;
      x = next;
    }
    return r;
  }

  // Topmost node of x's set.
  NodeId top(NodeId x) { return top_[find(x)]; }

  // Joins the set of child c with that of its parent p; the result keeps
  // p's top.
  void join(NodeId c, NodeId p) {
    if (stats_ != nullptr) ++stats_->unions;
    NodeId a = find(c);
    NodeId b = find(p);
    if (a == b) return;
    const NodeId t = top_[b];
    if (rank_[a] > rank_[b]) std::swap(a, b);
    up_[a] = b;
    if (rank_[a] == rank_[b]) ++rank_[b];
    top_[b] = t;
  }

 private:
  std::vector<NodeId> up_;
  std::vector<std::uint8_t> rank_;
  std::vector<NodeId> top_;
  PathStats* stats_;
};

// Path indices by non-increasing weight; counting sort when the weights are
// small non-negative integers.
std::vector<std::size_t> by_weight_desc(std::span<const WeightedPath> paths) {
  std::vector<std::size_t> order(paths.size());
  std::int64_t lo = INT64_MAX;
  std::int64_t hi = INT64_MIN;
  for (const auto& p : paths) {
    lo = std::min(lo, p.weight);
    hi = std::max(hi, p.weight);
  }
  if (!paths.empty() && lo >= 0 && hi <= 4 * static_cast<std::int64_t>(paths.size()) + 1024) {
    std::vector<std::size_t> start(static_cast<std::size_t>(hi) + 2, 0);
    for (const auto& p : paths) ++start[static_cast<std::size_t>(hi - p.weight) + 1];
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    for (std::size_t k = 0; k < paths.size(); ++k) {
      order[start[static_cast<std::size_t>(hi - paths[k].weight)]++] = k;
    }
    return order;
  }
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return paths[a].weight > paths[b].weight; });
  return order;
}

std::vector<std::int64_t> path_max_unchecked(std::span<const NodeId> parent,
                                             std::span<const WeightedPath> paths,
                                             PathStats* stats) {
  std::vector<std::int64_t> out(parent.size(), kUncovered);
  TopUnionFind uf(parent.size(), stats);
  for (std::size_t k : by_weight_desc(paths)) {
    const WeightedPath& p = paths[k];
    if (stats != nullptr) ++stats->paths;
    // ids fall strictly along an ancestor chain, so "below u" is "> u"
    for (NodeId a = uf.top(p.v); a > p.u; a = uf.top(parent[a])) {
      out[a] = p.weight;
      uf.join(a, parent[a]);
    }
  }
  return out;
}

std::vector<std::int64_t> path_sum_unchecked(std::span<const NodeId> parent,
                                             std::span<const WeightedPath> paths,
                                             PathStats* stats) {
  std::vector<std::int64_t> out(parent.size(), 0);
  for (const auto& p : paths) {
    out[p.v] += p.weight;
    out[p.u] -= p.weight;
  }
  if (stats != nullptr) stats->paths += static_cast<std::int64_t>(paths.size());
  for (auto v = static_cast<NodeId>(parent.size()) - 1; v > 0; --v) out[parent[v]] += out[v];
  return out;
}

}  // namespace

std::vector<std::int64_t> tree_path_max(std::span<const NodeId> parent,
                                        std::span<const WeightedPath> paths, PathStats* stats) {
  check_paths(parent, paths);
  return path_max_unchecked(parent, paths, stats);
}

std::vector<std::int64_t> tree_path_sum(std::span<const NodeId> parent,
                                        std::span<const WeightedPath> paths, PathStats* stats) {
  check_paths(parent, paths);
  return path_sum_unchecked(parent, paths, stats);
}

std::vector<RestrictedValue> merge_small_quasigaps(const InducedTree& parent,
                                                   std::span<const InducedTree> children,
                                                   std::span<const QuasigapMap> child_gaps, Pos m,
                                                   PathStats* stats) {
  const NodeId size = parent.size();
  std::vector<RestrictedValue> out(static_cast<std::size_t>(size));
  if (children.empty()) return out;

  const std::int64_t infinite = std::int64_t{parent.span().length()} + 1;
  std::vector<WeightedPath> unit;
  std::vector<WeightedPath> weighted;
  for (std::size_t k = 0; k < children.size(); ++k) {
    const InducedTree& t = children[k];
    for (NodeId y = 1; y < t.size(); ++y) {
      const NodeId v = t.origin(y);
      const NodeId u = t.origin(t.parent(y));
      const Pos q = child_gaps[k][y];
      unit.push_back({v, u, 1});
      weighted.push_back({v, u, is_finite(q) ? std::int64_t{q} : infinite});
    }
  }

  std::vector<NodeId> up(static_cast<std::size_t>(size));
  for (NodeId v = 0; v < size; ++v) up[v] = parent.parent(v);
  const auto present = path_sum_unchecked(up, unit, stats);
  const auto largest = path_max_unchecked(up, weighted, stats);

  const auto all = static_cast<std::int64_t>(children.size());
  for (NodeId v = 1; v < size; ++v) {
    if (parent.word_length(parent.parent(v)) >= m) continue;
    if (present[v] != all) continue;
    const std::int64_t q = largest[v];
    if (q != kUncovered && q <= m && q <= parent.word_length(v)) {
      out[v] = RestrictedValue::exact(static_cast<Pos>(q));
    }
  }
  return out;
}

}  // namespace seeds
