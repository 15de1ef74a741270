#include "seeds/range_engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "seeds/quasigap.hpp"

namespace seeds {
namespace {

constexpr Pos kEmptyMin = INT32_MAX;
constexpr Pos kEmptyMax = INT32_MIN;

// Per-bucket minimum and maximum of a position set over [i..j] cut into
// blocks of d positions, stored interleaved (min, max) in borrowed memory.
struct Buckets {
  Pos* cell;

  [[nodiscard]] Pos& mn(std::size_t k) const { return cell[2 * k]; }
  [[nodiscard]] Pos& mx(std::size_t k) const { return cell[2 * k + 1]; }
  [[nodiscard]] bool empty(std::size_t k) const { return cell[2 * k] == kEmptyMin; }
};

void clear_buckets(Pos* cell, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    cell[2 * k] = kEmptyMin;
    cell[2 * k + 1] = kEmptyMax;
  }
}

class WindowState {
 public:
  WindowState(Interval range, Pos d, RangeStats* stats)
      : range_(range),
        d_(d),
        count_(static_cast<std::size_t>((range.length() + d - 1) / d)),
        stats_(stats) {}

  [[nodiscard]] std::size_t bucket_count() const { return count_; }
  [[nodiscard]] std::size_t bucket_of(Pos p) const {
    return static_cast<std::size_t>((p - range_.first) / d_);
  }

  void add(Buckets b, Pos p) const {
    const std::size_t k = bucket_of(p);
    b.mn(k) = std::min(b.mn(k), p);
    b.mx(k) = std::max(b.mx(k), p);
    bump_updates(1);
  }

  void merge_into(Buckets dst, Buckets src) const {
    for (std::size_t k = 0; k < count_; ++k) {
      dst.mn(k) = std::min(dst.mn(k), src.mn(k));
      dst.mx(k) = std::max(dst.mx(k), src.mx(k));
    }
    bump_updates(static_cast<std::int64_t>(count_));
  }

  // Largest gap between neighbouring non-empty buckets, capped at 2d + 1.
  // Equals maxgap whenever maxgap >= d; below d it only certifies "< d".
  [[nodiscard]] Pos scan(Buckets b) const {
    Pos best = 0;
    Pos prev = kEmptyMax;
    for (std::size_t k = 0; k < count_; ++k) {
      if (b.empty(k)) continue;
      if (prev != kEmptyMax) best = std::max(best, b.mn(k) - prev);
      prev = b.mx(k);
    }
    if (stats_ != nullptr) stats_->bucket_scans += static_cast<std::int64_t>(count_);
    return std::min(best, cap());
  }

  [[nodiscard]] Pos cap() const { return 2 * d_ + 1; }
  [[nodiscard]] Pos d() const { return d_; }
  [[nodiscard]] Interval range() const { return range_; }

  void bump_updates(std::int64_t k) const {
    if (stats_ != nullptr) stats_->bucket_updates += k;
  }

 private:
  Interval range_;
  Pos d_;
  std::size_t count_;
  RangeStats* stats_;
};

RestrictedValue gap_verdict(Pos c, Pos d) {
  if (c > 2 * d) return RestrictedValue::above();
  if (c >= d) return RestrictedValue::exact(c);
  return RestrictedValue::below();
}

struct Undo {
  std::size_t bucket;
  Pos mn;
  Pos mx;
};

// Storage for ChainBuckets, kept across chains to avoid reallocating.
struct ChainStore {
  std::vector<Pos> cells;
  std::vector<Undo> log;
};

// Bucket set with an undo log, for one chain of regular plausible nodes.
class ChainBuckets {
 public:
  ChainBuckets(const WindowState& w, Buckets base, ChainStore& store)
      : w_(w), cells_(store.cells), log_(store.log) {
    cells_.assign(base.cell, base.cell + 2 * w.bucket_count());
    log_.clear();
    b_ = Buckets{cells_.data()};
    w_.bump_updates(static_cast<std::int64_t>(w_.bucket_count()));
  }

  void insert(Pos p) {
    const std::size_t k = w_.bucket_of(p);
    log_.push_back({k, b_.mn(k), b_.mx(k)});
    b_.mn(k) = std::min(b_.mn(k), p);
    b_.mx(k) = std::max(b_.mx(k), p);
    w_.bump_updates(1);
  }

  void rescan() { current_ = w_.scan(b_); }
  [[nodiscard]] Pos current() const { return current_; }

  // Undoes the latest insert, which must be of p.
  void remove(Pos p) {
    const Undo u = log_.back();
    log_.pop_back();
    b_.mn(u.bucket) = u.mn;
    b_.mx(u.bucket) = u.mx;
    w_.bump_updates(1);

    const Interval g = w_.range();
    const Pos d = w_.d();
    if (p < g.first + 2 * d || p > g.last - 4 * d + 1) {
      // p may have been the smallest or largest occurrence; a gap vanished
      rescan();
      return;
    }
    // p had neighbours on both sides; its two gaps merge into one
    const std::size_t q = u.bucket;
    if (!b_.empty(q) && b_.mn(q) < p && p < b_.mx(q)) return;  // gap below d
    Pos pred = kEmptyMax;
    Pos succ = kEmptyMin;
    if (!b_.empty(q) && b_.mx(q) < p) pred = b_.mx(q);
    if (!b_.empty(q) && b_.mn(q) > p) succ = b_.mn(q);
    for (std::size_t k = q; pred == kEmptyMax && k > 0 && q - k < 2;) {
      --k;
      if (!b_.empty(k)) pred = b_.mx(k);
    }
    for (std::size_t k = q + 1; succ == kEmptyMin && k < w_.bucket_count() && k <= q + 2; ++k) {
      if (!b_.empty(k)) succ = b_.mn(k);
    }
    if (pred == kEmptyMax || succ == kEmptyMin) {
      current_ = w_.cap();
    } else {
      current_ = std::max(current_, std::min(succ - pred, w_.cap()));
    }
  }

 private:
  const WindowState& w_;
  std::vector<Pos>& cells_;
  std::vector<Undo>& log_;
  Buckets b_{};
  Pos current_ = 0;
};
// Buffers reused across the windows of one compute_in_range call, so the
// per-window passes touch memory that is already mapped.
struct WindowScratch {
  std::vector<char> plausible;
  ActiveSet active;
  std::vector<std::int32_t> plausible_kids;
  std::vector<NodeId> nearest_plausible;
  std::vector<std::int32_t> fill;
  std::vector<RestrictedValue> gaps;
  std::vector<std::int32_t> slot;
  std::vector<Pos> arena;  // slot k owns 2 * bucket_count cells
  std::vector<std::int32_t> free_slots;
  std::vector<NodeId> chain;
  // quasigap formula without the maxgap term; does not depend on d
  std::vector<std::int64_t> others;
  // sparse pass over the plausible top of the tree
  std::vector<std::int32_t> local;  // node id -> index into nodes; stale entries allowed
  std::vector<NodeId> nodes;        // plausible nodes in preorder
  std::vector<std::int32_t> up;     // local parent
  std::vector<std::int32_t> kids;   // plausible children
  std::vector<std::int32_t> slot_of;
  std::vector<Pos> chain_items;
  std::vector<std::int32_t> chain_cut;
  std::vector<std::int32_t> chain_ids;
  ChainStore chain_store;
};

void plausible_into(const InducedTree& tree, Pos d, std::vector<char>& out) {
  const Interval g = tree.span();
  const Pos n = g.length();
  const std::int64_t need = std::int64_t{n} - 6 * std::int64_t{d} + 2;
  out.assign(static_cast<std::size_t>(tree.size()), 0);
  for (NodeId v = 0; v < tree.size(); ++v) {
    const std::int64_t first = tree.first(v);
    const std::int64_t last = tree.last(v);
    out[v] = tree.count(v) > 0 && first < g.first + 2 * std::int64_t{d} &&
             last > g.last - 4 * std::int64_t{d} + 1 &&
             2 * std::int64_t{d} * (tree.count(v) - 1) >= need;
  }
}

void active_into(const InducedTree& tree, const std::vector<char>& plausible, WindowScratch& s) {
  const NodeId size = tree.size();
  const auto usize = static_cast<std::size_t>(size);
  ActiveSet& a = s.active;
  a.count = 0;
  a.active.assign(usize, 0);
  a.nearest_active.assign(usize, kNoNode);
  s.plausible_kids.assign(usize, 0);
  for (NodeId v = 1; v < size; ++v) {
    if (plausible[v]) ++s.plausible_kids[tree.parent(v)];
  }
  s.nearest_plausible.assign(usize, kNoNode);
  for (NodeId v = 0; v < size; ++v) {
    a.active[v] = v == tree.root() || (plausible[v] && s.plausible_kids[v] != 1);
    a.count += a.active[v];
    const NodeId p = tree.parent(v);
    s.nearest_plausible[v] = plausible[v] ? v : s.nearest_plausible[p];
    a.nearest_active[v] = a.active[v] ? v : a.nearest_active[p];
  }

  auto group = [&](const std::vector<NodeId>& owner, std::vector<std::int32_t>& head,
                   std::vector<Pos>& items) {
    head.assign(usize + 1, 0);
    for (NodeId leaf : tree.leaves()) ++head[owner[leaf] + 1];
    for (NodeId v = 0; v < size; ++v) head[v + 1] += head[v];
    items.resize(static_cast<std::size_t>(head[size]));
    s.fill.assign(head.begin(), head.end() - 1);
    for (NodeId leaf : tree.leaves()) items[s.fill[owner[leaf]]++] = tree.leaf_pos(leaf);
  };
  group(s.nearest_plausible, a.l1_head, a.l1);
  group(a.nearest_active, a.l2_head, a.l2);
}

void maxgaps_into(const InducedTree& tree, Pos d, const std::vector<char>& plausible,
                  const ActiveSet& active, RangeStats* stats, WindowScratch& s) {
  const NodeId size = tree.size();
  const WindowState w(tree.span(), d, stats);
  auto& out = s.gaps;
  out.assign(static_cast<std::size_t>(size), RestrictedValue{});

  // Bucket arrays of active nodes whose subtree is done but whose active
  // parent is not.
  auto& slot = s.slot;
  auto& arena = s.arena;
  auto& free_slots = s.free_slots;
  const std::size_t stride = 2 * w.bucket_count();
  slot.assign(static_cast<std::size_t>(size), -1);
  arena.clear();
  free_slots.clear();
  std::int32_t slots = 0;
  auto buckets = [&](NodeId v) { return Buckets{arena.data() + stride * static_cast<std::size_t>(slot[v])}; };
  // The arena may grow, so callers re-derive Buckets after every acquire.
  auto acquire = [&](NodeId v) {
    if (slot[v] >= 0) return;
    if (free_slots.empty()) {
      slot[v] = slots++;
      arena.resize(stride * static_cast<std::size_t>(slots));
    } else {
      slot[v] = free_slots.back();
      free_slots.pop_back();
    }
    clear_buckets(buckets(v).cell, w.bucket_count());
  };

  auto& chain = s.chain;
  for (NodeId v = size - 1; v >= 0; --v) {
    if (!active.active[v]) continue;
    acquire(v);
    for (Pos p : active.l2_of(v)) w.add(buckets(v), p);
    const Buckets mine = buckets(v);
    out[v] = gap_verdict(w.scan(mine), d);

    chain.clear();
    for (NodeId p = tree.parent(v); p != kNoNode && plausible[p] && !active.active[p];
         p = tree.parent(p)) {
      chain.push_back(p);
    }
    if (!chain.empty()) {
      ChainBuckets cb(w, mine, s.chain_store);
      for (NodeId p : chain) {
        for (Pos x : active.l1_of(p)) cb.insert(x);
      }
      cb.rescan();
      for (std::size_t k = chain.size(); k-- > 0;) {
        out[chain[k]] = gap_verdict(cb.current(), d);
        if (k == 0) break;
        const auto items = active.l1_of(chain[k]);
        for (std::size_t t = items.size(); t-- > 0;) cb.remove(items[t]);
      }
    }

    if (v != tree.root()) {
      const NodeId up = active.nearest_active[tree.parent(v)];
      acquire(up);
      w.merge_into(buckets(up), buckets(v));
    }
    free_slots.push_back(slot[v]);
    slot[v] = -1;
  }
}

void others_into(const InducedTree& tree, std::vector<std::int64_t>& out) {
  out.resize(static_cast<std::size_t>(tree.size()));
  for (NodeId v = 1; v < tree.size(); ++v) {
    out[v] = quasigap_bound(tree.first(v), tree.last(v), 0, tree.word_length(tree.parent(v)),
                            tree.span());
  }
}

bool is_plausible(const InducedTree& tree, NodeId v, Pos d, std::int64_t need) {
  const Interval g = tree.span();
  return tree.count(v) > 0 && tree.first(v) < g.first + 2 * std::int64_t{d} &&
         tree.last(v) > g.last - 4 * std::int64_t{d} + 1 &&
         2 * std::int64_t{d} * (tree.count(v) - 1) >= need;
}

// Calls emit(v, verdict) for every node whose verdict is not Above; all
// others are Above. Requires s.others filled for this tree.
//
// Same result as restricted_maxgaps over find_plausible/find_active, but
// only the plausible top of the tree is visited: plausible nodes are closed
// under parents, so a preorder sweep can jump over every other subtree, and
// the leaves a plausible node owns directly are leaf-rank ranges between its
// plausible children.
template <class Emit>
void window_pass(const InducedTree& tree, Pos d, RangeStats* stats, WindowScratch& s, Emit&& emit) {
  const Interval g = tree.span();
  const std::int64_t need = std::int64_t{g.length()} - 6 * std::int64_t{d} + 2;
  const std::span<const NodeId> leaves = tree.leaves();

  // Plausible nodes in preorder, with local parents and plausible-child counts.
  auto& nodes = s.nodes;
  auto& up = s.up;
  auto& kids = s.kids;
  auto& local = s.local;
  nodes.clear();
  up.clear();
  if (local.size() != static_cast<std::size_t>(tree.size())) {
    local.assign(static_cast<std::size_t>(tree.size()), -1);
  }
  for (NodeId v = 0; v < tree.size();) {
    if (!is_plausible(tree, v, d, need)) {
      v = tree.subtree_end(v);
      continue;
    }
    local[v] = static_cast<std::int32_t>(nodes.size());
    up.push_back(v == tree.root() ? -1 : local[tree.parent(v)]);
    nodes.push_back(v);
    ++v;
  }
  const auto k = static_cast<std::int32_t>(nodes.size());
  kids.assign(static_cast<std::size_t>(k), 0);
  for (std::int32_t x = 1; x < k; ++x) ++kids[up[x]];
  auto is_active = [&](std::int32_t x) { return x == 0 || kids[x] != 1; };
  auto in_window = [&](NodeId v) {
    const std::int32_t x = local[v];
    return x >= 0 && x < k && nodes[x] == v;
  };

  std::int64_t active_count = 0;
  for (std::int32_t x = 0; x < k; ++x) active_count += is_active(x);
  assert(active_count <= 2 * (g.length() / plausible_count_threshold(g.length(), d)) + 2);
  if (stats != nullptr) {
    ++stats->windows;
    stats->active += active_count;
    stats->plausible += k;
  }

  // Leaves whose deepest plausible ancestor is nodes[x], in rank order.
  auto own_leaves = [&](std::int32_t x, auto&& visit) {
    const NodeId v = nodes[x];
    Pos r = tree.begin_leaf(v);
    for (NodeId c = v + 1; c < tree.subtree_end(v); c = tree.subtree_end(c)) {
      if (!in_window(c)) continue;
      for (; r < tree.begin_leaf(c); ++r) visit(tree.leaf_pos(leaves[r]));
      r = tree.end_leaf(c);
    }
    for (; r < tree.end_leaf(v); ++r) visit(tree.leaf_pos(leaves[r]));
  };

  const WindowState w(g, d, stats);
  const std::size_t stride = 2 * w.bucket_count();
  auto& gaps = s.gaps;
  gaps.assign(static_cast<std::size_t>(k), RestrictedValue{});
  auto& slot = s.slot_of;
  slot.assign(static_cast<std::size_t>(k), -1);
  auto& arena = s.arena;
  auto& free_slots = s.free_slots;
  arena.clear();
  free_slots.clear();
  std::int32_t slots = 0;
  auto buckets = [&](std::int32_t x) {
    return Buckets{arena.data() + stride * static_cast<std::size_t>(slot[x])};
  };
  // The arena may grow, so callers re-derive Buckets after every acquire.
  auto acquire = [&](std::int32_t x) {
    if (slot[x] >= 0) return;
    if (free_slots.empty()) {
      slot[x] = slots++;
      arena.resize(stride * static_cast<std::size_t>(slots));
    } else {
      slot[x] = free_slots.back();
      free_slots.pop_back();
    }
    clear_buckets(buckets(x).cell, w.bucket_count());
  };

  auto& chain_items = s.chain_items;  // leaf positions of the chain, bottom-up
  auto& chain_cut = s.chain_cut;      // chain node t owns items [cut[t], cut[t+1])
  for (std::int32_t x = k - 1; x >= 0; --x) {
    if (!is_active(x)) continue;
    acquire(x);
    own_leaves(x, [&](Pos p) { w.add(buckets(x), p); });
    gaps[x] = gap_verdict(w.scan(buckets(x)), d);

    // Upward chain of non-active plausible nodes, ending below the next
    // active node.
    std::int32_t top = up[x];
    chain_items.clear();
    chain_cut.assign(1, 0);
    for (; top >= 0 && !is_active(top); top = up[top]) {
      own_leaves(top, [&](Pos p) { chain_items.push_back(p); });
      chain_cut.push_back(static_cast<std::int32_t>(chain_items.size()));
    }
    const std::size_t chain_len = chain_cut.size() - 1;
    if (chain_len > 0) {
      ChainBuckets cb(w, buckets(x), s.chain_store);
      for (Pos p : chain_items) cb.insert(p);
      cb.rescan();
      std::int32_t y = up[x];
      // y walks the chain bottom-up; verdicts are produced top-down
      auto& ids = s.chain_ids;
      ids.clear();
      for (std::size_t t = 0; t < chain_len; ++t, y = up[y]) ids.push_back(y);
      for (std::size_t t = chain_len; t-- > 0;) {
        gaps[ids[t]] = gap_verdict(cb.current(), d);
        if (t == 0) break;
        for (std::int32_t i = chain_cut[t + 1]; i-- > chain_cut[t];) cb.remove(chain_items[i]);
      }
    }

    if (top >= 0) {
      acquire(top);
      w.merge_into(buckets(top), buckets(x));
      for (Pos p : chain_items) w.add(buckets(top), p);
    }
    free_slots.push_back(slot[x]);
    slot[x] = -1;
  }

  for (std::int32_t x = 1; x < k; ++x) {
    const NodeId v = nodes[x];
    const Pos len = tree.word_length(v);
    const std::int64_t others = s.others[v];
    const RestrictedValue mg = gaps[x];
    std::int64_t m = 0;
    if (mg.verdict == Verdict::Above) {
      continue;
    } else if (mg.verdict == Verdict::Exact) {
      m = std::max<std::int64_t>(mg.value, others);
    } else if (others >= d) {
      m = others;  // maxgap < d <= others
    } else {
      if (others <= len) emit(v, RestrictedValue::below());
      continue;
    }
    if (m <= 2 * std::int64_t{d} && m <= len) emit(v, RestrictedValue::exact(static_cast<Pos>(m)));
  }
}

}  // namespace

Pos plausible_count_threshold(Pos n, Pos d) {
  const std::int64_t need = std::int64_t{n} - 6 * std::int64_t{d} + 2;
  if (need <= 0) return 1;
  return static_cast<Pos>((need + 2 * d - 1) / (2 * d) + 1);
}

std::vector<char> find_plausible(const InducedTree& tree, Pos d) {
  std::vector<char> out;
  plausible_into(tree, d, out);
  return out;
}

ActiveSet find_active(const InducedTree& tree, const std::vector<char>& plausible) {
  WindowScratch s;
  active_into(tree, plausible, s);
  return std::move(s.active);
}

std::vector<RestrictedValue> restricted_maxgaps(const InducedTree& tree, Pos d,
                                                const std::vector<char>& plausible,
                                                const ActiveSet& active, RangeStats* stats) {
  WindowScratch s;
  maxgaps_into(tree, d, plausible, active, stats, s);
  return std::move(s.gaps);
}

std::vector<RestrictedValue> window_quasigaps(const InducedTree& tree, Pos d, RangeStats* stats) {
  WindowScratch s;
  others_into(tree, s.others);
  std::vector<RestrictedValue> out(static_cast<std::size_t>(tree.size()));
  window_pass(tree, d, stats, s, [&](NodeId v, RestrictedValue x) { out[v] = x; });
  return out;
}

std::vector<RestrictedValue> compute_in_range(const InducedTree& tree, Pos l, Pos r,
                                              RangeStats* stats) {
  if (l < 1 || r < l) throw std::invalid_argument("compute_in_range: need 1 <= l <= r");
  std::vector<RestrictedValue> out(static_cast<std::size_t>(tree.size()));
  WindowScratch s;
  others_into(tree, s.others);
  // Below only counts from the lowest window; later windows contribute
  // their Exact verdicts.
  bool lowest = true;
  for (std::int64_t d = l;; d *= 2) {
    window_pass(tree, static_cast<Pos>(d), stats, s, [&](NodeId v, RestrictedValue x) {
      if (x.verdict == Verdict::Exact) {
        assert(out[v].verdict != Verdict::Exact || out[v].value == x.value);
        out[v] = x;
      } else if (lowest) {
        out[v] = x;
      }
    });
    lowest = false;
    if (2 * d >= r) break;
  }
  return out;
}

}  // namespace seeds
