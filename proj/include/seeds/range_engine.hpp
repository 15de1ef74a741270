#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seeds/text.hpp"
#include "seeds/tree.hpp"

namespace seeds {

enum class Verdict : std::uint8_t { Below, Exact, Above };

/// A value known only relative to a window [lo, hi]: exactly, or as a
/// certificate that it lies below lo or above hi.
struct RestrictedValue {
  Verdict verdict = Verdict::Above;
  Pos value = 0;  // meaningful for Exact only

  static constexpr RestrictedValue below() { return {Verdict::Below, 0}; }
  static constexpr RestrictedValue exact(Pos v) { return {Verdict::Exact, v}; }
  static constexpr RestrictedValue above() { return {Verdict::Above, 0}; }
  friend bool operator==(const RestrictedValue&, const RestrictedValue&) = default;
};

/// Work counters, summed over every window processed.
struct RangeStats {
  std::int64_t windows = 0;
  std::int64_t plausible = 0;
  std::int64_t active = 0;
  std::int64_t bucket_updates = 0;  // element inserts, removals and merges
  std::int64_t bucket_scans = 0;    // buckets visited by full scans
};

/// Nodes that may have a quasigap in [d, 2d]: first < i + 2d,
/// last > j - 4d + 1 and 2d * (count - 1) >= N - 6d + 2. The set is closed
/// under taking parents and always holds the root.
std::vector<char> find_plausible(const InducedTree& tree, Pos d);

/// Smallest occurrence count a plausible node can have.
Pos plausible_count_threshold(Pos n, Pos d);

/// The root plus every plausible node with zero or at least two plausible
/// children, with the leaf lists that feed the bucket algorithms:
/// l1(v) holds the leaves whose deepest plausible ancestor is v,
/// l2(v) the leaves whose deepest active ancestor is v.
struct ActiveSet {
  std::vector<char> active;
  std::vector<NodeId> nearest_active;  // deepest active ancestor-or-self
  std::vector<std::int32_t> l1_head;
  std::vector<Pos> l1;
  std::vector<std::int32_t> l2_head;
  std::vector<Pos> l2;
  Pos count = 0;

  [[nodiscard]] std::span<const Pos> l1_of(NodeId v) const {
    return std::span<const Pos>(l1).subspan(static_cast<std::size_t>(l1_head[v]),
                                            static_cast<std::size_t>(l1_head[v + 1] - l1_head[v]));
  }
  [[nodiscard]] std::span<const Pos> l2_of(NodeId v) const {
    return std::span<const Pos>(l2).subspan(static_cast<std::size_t>(l2_head[v]),
                                            static_cast<std::size_t>(l2_head[v + 1] - l2_head[v]));
  }
};

ActiveSet find_active(const InducedTree& tree, const std::vector<char>& plausible);

/// maxgap(Occ(v)) restricted to [d, 2d] for every plausible node: active
/// nodes bottom-up over min/max bucket arrays, then each upward chain of
/// the remaining plausible nodes by adding its leaf lists and peeling them
/// off again. Entries of non-plausible nodes are Above and carry no meaning.
std::vector<RestrictedValue> restricted_maxgaps(const InducedTree& tree, Pos d,
                                                const std::vector<char>& plausible,
                                                const ActiveSet& active, RangeStats* stats = nullptr);

/// Quasigaps of all nodes of `tree` restricted to the window [d, 2d].
///
/// Below means the quasigap formula value is under d. That is the quasigap
/// itself unless the node is shorter than d, where the class may have no
/// quasiseed at all.
std::vector<RestrictedValue> window_quasigaps(const InducedTree& tree, Pos d,
                                              RangeStats* stats = nullptr);

/// Quasigaps restricted to [l, r'], where r' is r rounded up to l * 2^k,
/// from the windows [l, 2l], [2l, 4l], ... An Exact verdict from any window
/// wins; otherwise Below when the lowest window says so, else Above.
///
/// Throws std::invalid_argument unless 1 <= l <= r.
std::vector<RestrictedValue> compute_in_range(const InducedTree& tree, Pos l, Pos r,
                                              RangeStats* stats = nullptr);

}  // namespace seeds
