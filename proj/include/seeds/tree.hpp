#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seeds/rmq.hpp"
#include "seeds/text.hpp"

namespace seeds {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// A compacted trie of a set of suffixes w[p..n]# (p in some interval),
/// stored in preorder: node 0 is the root and the subtree of v occupies ids
/// [v, subtree_end(v)). Children appear left to right, so leaves in id order
/// are the suffixes in lexicographic order.
///
/// String depths of leaves include the end marker (n - p + 2); every other
/// node's depth is the length of the word it spells. Edge labels are not
/// stored: the word of v is w[rep(v) .. rep(v) + word_length(v) - 1].
class InducedTree {
 public:
  InducedTree() = default;

  [[nodiscard]] Interval span() const noexcept { return span_; }
  [[nodiscard]] Pos text_length() const noexcept { return n_; }
  [[nodiscard]] NodeId size() const noexcept { return static_cast<NodeId>(parent_.size()); }
  [[nodiscard]] static constexpr NodeId root() noexcept { return 0; }

  [[nodiscard]] NodeId parent(NodeId v) const { return parent_[v]; }
  [[nodiscard]] Pos depth(NodeId v) const { return depth_[v]; }
  [[nodiscard]] bool is_leaf(NodeId v) const { return leaf_[v] != 0; }
  [[nodiscard]] Pos leaf_pos(NodeId v) const { return leaf_[v]; }
  [[nodiscard]] NodeId subtree_end(NodeId v) const { return end_[v]; }
  [[nodiscard]] NodeId origin(NodeId v) const { return origin_[v]; }

  /// Length of the word spelled by v, excluding the end marker.
  [[nodiscard]] Pos word_length(NodeId v) const {
    return leaf_[v] != 0 ? n_ - leaf_[v] + 1 : depth_[v];
  }
  /// A text position where the word of v starts.
  [[nodiscard]] Pos rep(NodeId v) const { return leaf_[first_leaf_[v]]; }

  /// Occurrence statistics restricted to the tree's leaves: first(v),
  /// last(v) and |Occ(v)|.
  [[nodiscard]] Pos first(NodeId v) const { return first_[v]; }
  [[nodiscard]] Pos last(NodeId v) const { return last_[v]; }
  [[nodiscard]] Pos count(NodeId v) const { return end_leaf_[v] - begin_leaf(v); }

  /// Leaves of v's subtree in left-to-right order, as leaf ranks.
  [[nodiscard]] Pos begin_leaf(NodeId v) const { return leaf_rank_[first_leaf_[v]]; }
  [[nodiscard]] Pos end_leaf(NodeId v) const { return end_leaf_[v]; }
  [[nodiscard]] std::span<const NodeId> leaves() const noexcept { return leaves_; }

  [[nodiscard]] NodeId first_child(NodeId v) const {
    return v + 1 < end_[v] ? v + 1 : kNoNode;
  }
  [[nodiscard]] NodeId next_sibling(NodeId c) const {
    const NodeId p = parent_[c];
    return p != kNoNode && end_[c] < end_[p] ? end_[c] : kNoNode;
  }
  [[nodiscard]] bool is_ancestor(NodeId a, NodeId v) const {
    return a <= v && v < end_[a];
  }

  [[nodiscard]] std::span<const Pos> depths() const noexcept { return depth_; }

  /// Node id of the leaf for position p, or kNoNode when p is not a leaf.
  [[nodiscard]] NodeId leaf_of(Pos p) const;

 private:
  friend class TreeBuilder;

  Interval span_{};
  Pos n_ = 0;
  std::vector<NodeId> parent_;
  std::vector<Pos> depth_;
  std::vector<Pos> leaf_;
  std::vector<NodeId> end_;
  std::vector<NodeId> origin_;
  std::vector<Pos> first_;
  std::vector<Pos> last_;
  std::vector<NodeId> first_leaf_;
  std::vector<Pos> end_leaf_;
  std::vector<Pos> leaf_rank_;
  std::vector<NodeId> leaves_;
  std::vector<NodeId> leaf_by_pos_;
};

/// Builds an InducedTree from leaves given in lexicographic order, keeping
/// the rightmost path on a stack (the classic suffix-array to suffix-tree
/// conversion). `lcp` is the string depth of the lowest common ancestor of
/// the new leaf and the previous one.
class TreeBuilder {
 public:
  TreeBuilder(Interval span, Pos text_length, NodeId root_origin = kNoNode,
              std::size_t leaf_hint = 0);

  void add_leaf(Pos pos, Pos lcp, NodeId lca_origin = kNoNode,
                NodeId leaf_origin = kNoNode);
  [[nodiscard]] std::size_t leaf_count() const noexcept { return leaves_; }

  InducedTree finish() &&;

 private:
  NodeId make(Pos depth, Pos leaf, NodeId origin);

  Interval span_;
  Pos n_;
  std::size_t leaves_ = 0;
  std::vector<NodeId> parent_;
  std::vector<Pos> depth_;
  std::vector<Pos> leaf_;
  std::vector<NodeId> origin_;
  std::vector<NodeId> last_child_;
  std::vector<NodeId> prev_sibling_;
  std::vector<NodeId> path_;
};

/// Lowest common ancestors over a fixed InducedTree. Uses the preorder
/// layout: for u < v, lca(u, v) is the parent of the node in (u, v] whose
/// parent is shallowest. The tree must outlive the index.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const InducedTree& tree);
  LcaIndex(const LcaIndex&) = delete;
  LcaIndex& operator=(const LcaIndex&) = delete;
  LcaIndex(LcaIndex&& o) noexcept { *this = std::move(o); }
  LcaIndex& operator=(LcaIndex&& o) noexcept {
    // the RMQ borrows parent_depth_, whose buffer survives the move
    tree_ = o.tree_;
    parent_depth_ = std::move(o.parent_depth_);
    rmq_ = std::move(o.rmq_);
    return *this;
  }

  /// Throws std::out_of_range on unknown ids.
  [[nodiscard]] NodeId lca(NodeId a, NodeId b) const;

 private:
  const InducedTree* tree_ = nullptr;
  std::vector<Pos> parent_depth_;
  RangeMin<Pos> rmq_;
};

}  // namespace seeds
