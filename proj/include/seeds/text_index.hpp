#pragma once

#include <vector>

#include "seeds/rmq.hpp"
#include "seeds/text.hpp"
#include "seeds/tree.hpp"

namespace seeds {

/// Suffix order of w# (the end marker sorts below every symbol) together with
/// the LCP array: lcp[r] = lce(order[r-1], order[r]), lcp[0] = 0. Both have
/// n + 1 entries and hold 1-based positions; order[0] == n + 1 is the bare
/// end marker suffix.
struct SuffixArray {
  std::vector<Pos> order;
  std::vector<Pos> lcp;
};

/// Induced-sorting (SA-IS) construction followed by Kasai's LCP scan.
/// Throws TextError on an empty text.
SuffixArray build_suffix_array(const Text& text);

/// Sorts suffixes of an arbitrary integer string terminated by a unique 0.
/// `s` has every symbol in [0, alphabet) and s.back() == 0. Returns 0-based
/// suffix starts; exposed for tests.
std::vector<Pos> sais(const std::vector<Symbol>& s, Symbol alphabet);

/// The global text structures every other module consumes: suffix array,
/// inverse suffix array, LCP with constant-time range minima (LCE queries),
/// and the suffix tree of w# with its LCA index.
///
/// Not copyable or movable: the LCA and LCE indexes point into members.
class TextIndex {
 public:
  explicit TextIndex(Text text);
  TextIndex(const TextIndex&) = delete;
  TextIndex& operator=(const TextIndex&) = delete;

  [[nodiscard]] const Text& text() const noexcept { return text_; }
  [[nodiscard]] Pos n() const noexcept { return text_.size(); }

  [[nodiscard]] const SuffixArray& suffix_array() const noexcept { return sa_; }
  /// Rank of suffix p (1 <= p <= n + 1) in suffix_array().order.
  [[nodiscard]] Pos rank(Pos p) const { return rank_[p]; }

  /// Longest common prefix of w[i..n] and w[j..n]. Throws std::out_of_range
  /// unless 1 <= i, j <= n.
  [[nodiscard]] Pos lce(Pos i, Pos j) const;

  /// Suffix tree of w#: leaves annotated 1..n+1, the leaf n+1 being the bare
  /// end marker.
  [[nodiscard]] const InducedTree& suffix_tree() const noexcept { return tree_; }
  [[nodiscard]] const LcaIndex& lca() const noexcept { return lca_; }

 private:
  Text text_;
  SuffixArray sa_;
  std::vector<Pos> rank_;
  RangeMin<Pos> lcp_min_;
  InducedTree tree_;
  LcaIndex lca_;
};

/// Suffix tree of w# built from the suffix array by rightmost-path insertion.
InducedTree build_suffix_tree(const Text& text, const SuffixArray& sa);

/// T([1..n]) straight from the suffix array: the suffix tree without the
/// bare end-marker leaf. Node origins are kNoNode. Same tree as
/// induce_root_tree without keeping the full suffix tree around.
InducedTree build_root_tree(const Text& text, const SuffixArray& sa);

}  // namespace seeds
