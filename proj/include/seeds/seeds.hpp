#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "seeds/main_algorithm.hpp"
#include "seeds/rmq.hpp"
#include "seeds/text_index.hpp"

namespace seeds {

/// Lengths [lo..hi] of prefixes of the word of `node` (an edge of the
/// suffix tree) sharing one occurrence set. `pos` is the first occurrence.
struct CandidateSet {
  NodeId node = kNoNode;
  Pos pos = 0;
  Pos lo = 0;
  Pos hi = 0;
  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

/// One candidate set per node with a finite quasigap: [quasigap, |v|].
std::vector<CandidateSet> candidate_sets(const InducedTree& tree, const QuasigapMap& gaps);

/// Decides for a quasiseed w[i1..i1+len-1] with last occurrence ik whether
/// overhanging occurrences also cover the two ends of the text.
///
/// Left: i1 = 1, or some t in [i1-1, len-1] has w[1..t] equal to the
/// length-t suffix of the candidate. Right: ik+len-1 >= n, or some s in
/// [n-ik-len+1, len-1] has w[n-s+1..n] equal to its length-s prefix.
class BorderFilter {
 public:
  explicit BorderFilter(const Text& text);
  BorderFilter(const BorderFilter&) = delete;
  BorderFilter& operator=(const BorderFilter&) = delete;

  [[nodiscard]] bool left_ok(Pos i1, Pos len) const;
  [[nodiscard]] bool right_ok(Pos ik, Pos len) const;
  [[nodiscard]] bool is_border_seed(Pos i1, Pos ik, Pos len) const {
    return left_ok(i1, len) && right_ok(ik, len);
  }

  /// Smallest len in [lo..hi] with right_ok, or hi + 1. The right
  /// condition is monotone in len, and its threshold is non-increasing in
  /// ik, so all thresholds come from one two-pointer pass.
  [[nodiscard]] Pos right_from(Pos ik, Pos lo, Pos hi) const;

  /// Calls emit(a, b) for the maximal runs [a..b] of lengths in [lo..hi]
  /// with left_ok, in increasing order.
  void left_runs(Pos i1, Pos lo, Pos hi, const std::function<void(Pos, Pos)>& emit) const;

 private:
  // max over p in [a..b] of z[p] + p, with z over 1..n+1
  [[nodiscard]] std::int64_t reach(Pos a, Pos b) const;
  // first p in [a..b] with z[p] >= t, or 0
  [[nodiscard]] Pos next_at_least(Pos a, Pos b, Pos t) const;

  Pos n_;
  std::vector<Pos> z_;         // z_[p] = lce(1, p), 1-based, z_[n+1] = 0
  std::vector<Pos> z_reach_;   // z_[p] + p
  std::vector<Pos> tail_key_;  // B[r] - r, B[r] = common suffix of w[1..r] and w
  RangeMax<Pos> z_max_;
  RangeMax<Pos> reach_max_;
  RangeMax<Pos> tail_max_;
  std::vector<Pos> right_min_;  // smallest len with right_ok(ik, len), per ik
};

struct SeedRange {
  NodeId node = kNoNode;
  Pos pos = 0;  // first occurrence of the word of node
  Pos lo = 0;
  Pos hi = 0;
  friend bool operator==(const SeedRange&, const SeedRange&) = default;
};

/// All seeds as prefix-length ranges on suffix-tree edges: every length in
/// [lo..hi] of every range is a seed, each seed appears once.
class SeedSet {
 public:
  SeedSet() = default;
  explicit SeedSet(std::vector<SeedRange> ranges);

  [[nodiscard]] const std::vector<SeedRange>& ranges() const noexcept { return ranges_; }
  [[nodiscard]] std::int64_t count() const noexcept { return count_; }
  [[nodiscard]] bool empty() const noexcept { return ranges_.empty(); }
  /// (pos, len) of a shortest seed; ties go to the smallest pos. Throws
  /// std::logic_error on an empty set.
  [[nodiscard]] std::pair<Pos, Pos> shortest() const;
  /// Every seed of minimal length as (pos, len), ordered by pos.
  [[nodiscard]] std::vector<std::pair<Pos, Pos>> all_shortest() const;
  /// Visits seeds as (pos, len) in range order; stops early when visit
  /// returns false.
  void enumerate(const std::function<bool(Pos, Pos)>& visit) const;

 private:
  std::vector<SeedRange> ranges_;
  std::int64_t count_ = 0;
};

/// Filters candidate sets down to seeds.
SeedSet filter_seeds(const InducedTree& tree, const std::vector<CandidateSet>& candidates,
                     const BorderFilter& filter);

/// An analyzed text: T([1..n]) and its quasigaps, computed once on
/// construction. Immutable afterwards. The suffix array and full suffix
/// tree are only needed to build T([1..n]) and are released before the
/// quasigaps are computed, so node origins refer to a tree that no longer
/// exists.
class Analysis {
 public:
  explicit Analysis(Text text, SolverConfig config = {});
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  [[nodiscard]] const Text& text() const noexcept { return text_; }
  [[nodiscard]] const InducedTree& tree() const noexcept { return tree_; }
  [[nodiscard]] const QuasigapMap& quasigaps() const noexcept { return gaps_; }
  [[nodiscard]] const SolverStats& stats() const noexcept { return stats_; }

  [[nodiscard]] std::vector<CandidateSet> candidate_sets() const;
  [[nodiscard]] SeedSet all_seeds() const;
  /// (pos, len) of a shortest seed.
  [[nodiscard]] std::pair<Pos, Pos> shortest_seed() const;

 private:
  Text text_;
  InducedTree tree_;
  SolverStats stats_;
  QuasigapMap gaps_;
};

}  // namespace seeds
