#include "seeds/tree.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace seeds {

NodeId InducedTree::leaf_of(Pos p) const {
  if (!span_.contains(p)) return kNoNode;
  return leaf_by_pos_[static_cast<std::size_t>(p - span_.first)];
}

TreeBuilder::TreeBuilder(Interval span, Pos text_length, NodeId root_origin,
                         std::size_t leaf_hint)
    : span_(span), n_(text_length) {
  const std::size_t cap = 2 * leaf_hint + 1;
  parent_.reserve(cap);
  depth_.reserve(cap);
  leaf_.reserve(cap);
  origin_.reserve(cap);
  last_child_.reserve(cap);
  prev_sibling_.reserve(cap);
  make(0, 0, root_origin);
  path_.push_back(0);
}

NodeId TreeBuilder::make(Pos depth, Pos leaf, NodeId origin) {
  const auto id = static_cast<NodeId>(parent_.size());
  parent_.push_back(kNoNode);
  depth_.push_back(depth);
  leaf_.push_back(leaf);
  origin_.push_back(origin);
  last_child_.push_back(kNoNode);
  prev_sibling_.push_back(kNoNode);
  return id;
}

void TreeBuilder::add_leaf(Pos pos, Pos lcp, NodeId lca_origin, NodeId leaf_origin) {
  if (leaves_ > 0) {
    NodeId popped = kNoNode;
    while (depth_[path_.back()] > lcp) {
      popped = path_.back();
      path_.pop_back();
    }
    const NodeId top = path_.back();
    if (depth_[top] < lcp) {
      assert(popped != kNoNode && last_child_[top] == popped);
      const NodeId x = make(lcp, 0, lca_origin);
      prev_sibling_[x] = prev_sibling_[popped];
      last_child_[top] = x;
      parent_[x] = top;
      prev_sibling_[popped] = kNoNode;
      last_child_[x] = popped;
      parent_[popped] = x;
      path_.push_back(x);
    }
  }
  const NodeId leaf = make(n_ - pos + 2, pos, leaf_origin);
  const NodeId top = path_.back();
  parent_[leaf] = top;
  prev_sibling_[leaf] = last_child_[top];
  last_child_[top] = leaf;
  path_.push_back(leaf);
  ++leaves_;
}

InducedTree TreeBuilder::finish() && {
  const auto size = static_cast<NodeId>(parent_.size());
  InducedTree t;
  t.span_ = span_;
  t.n_ = n_;
  t.parent_.assign(size, kNoNode);
  t.depth_.resize(size);
  t.leaf_.resize(size);
  t.origin_.resize(size);
  t.end_.resize(size);
  t.first_.resize(size);
  t.last_.resize(size);
  t.first_leaf_.resize(size);
  t.end_leaf_.resize(size);
  t.leaf_rank_.assign(size, 0);
  t.leaves_.reserve(leaves_);
  t.leaf_by_pos_.assign(span_.empty() ? 0 : static_cast<std::size_t>(span_.length()), kNoNode);

  // Preorder renumbering; children are kept newest-first, so pushing them in
  // list order leaves the leftmost child on top of the stack.
  std::vector<NodeId> renum(size);
  std::vector<NodeId> stack;
  stack.reserve(64);
  stack.push_back(0);
  NodeId next = 0;
  while (!stack.empty()) {
    const NodeId old = stack.back();
    stack.pop_back();
    const NodeId id = next++;
    renum[old] = id;
    t.depth_[id] = depth_[old];
    t.leaf_[id] = leaf_[old];
    t.origin_[id] = origin_[old];
    for (NodeId c = last_child_[old]; c != kNoNode; c = prev_sibling_[c]) stack.push_back(c);
  }
  for (NodeId old = 1; old < size; ++old) t.parent_[renum[old]] = renum[parent_[old]];

  for (NodeId v = 0; v < size; ++v) {
    if (t.leaf_[v] != 0) {
      t.leaf_rank_[v] = static_cast<Pos>(t.leaves_.size());
      t.leaves_.push_back(v);
      if (span_.contains(t.leaf_[v])) {
        t.leaf_by_pos_[static_cast<std::size_t>(t.leaf_[v] - span_.first)] = v;
      }
    }
  }
  for (NodeId v = size - 1; v >= 0; --v) {
    t.end_[v] = v + 1;
    if (t.leaf_[v] != 0) {
      t.first_[v] = t.last_[v] = t.leaf_[v];
      t.first_leaf_[v] = v;
      t.end_leaf_[v] = t.leaf_rank_[v] + 1;
    } else {
      t.first_[v] = INT32_MAX;
      t.last_[v] = INT32_MIN;
      t.end_leaf_[v] = 0;
      // An internal node's first child is the next id; only an empty root
      // has none.
      t.first_leaf_[v] = v + 1 < size && t.parent_[v + 1] == v ? t.first_leaf_[v + 1] : v;
    }
  }
  for (NodeId v = size - 1; v > 0; --v) {
    const NodeId p = t.parent_[v];
    t.end_[p] = std::max(t.end_[p], t.end_[v]);
    t.first_[p] = std::min(t.first_[p], t.first_[v]);
    t.last_[p] = std::max(t.last_[p], t.last_[v]);
    t.end_leaf_[p] = std::max(t.end_leaf_[p], t.end_leaf_[v]);
  }
  return t;
}

LcaIndex::LcaIndex(const InducedTree& tree) : tree_(&tree) {
  parent_depth_.resize(static_cast<std::size_t>(tree.size()));
  for (NodeId v = 0; v < tree.size(); ++v) {
    parent_depth_[v] = v == tree.root() ? -1 : tree.depth(tree.parent(v));
  }
  rmq_ = RangeMin<Pos>(parent_depth_);
}

NodeId LcaIndex::lca(NodeId a, NodeId b) const {
  const NodeId size = tree_ == nullptr ? 0 : tree_->size();
  if (a < 0 || b < 0 || a >= size || b >= size) {
    throw std::out_of_range("lca: unknown node id " + std::to_string(a < 0 || a >= size ? a : b));
  }
  if (a == b) return a;
  const NodeId u = std::min(a, b);
  const NodeId v = std::max(a, b);
  const auto x = static_cast<NodeId>(rmq_.query(static_cast<std::size_t>(u) + 1,
                                                static_cast<std::size_t>(v)));
  return tree_->parent(x);
}

}  // namespace seeds
