#pragma once

#include <vector>

#include "seeds/text.hpp"
#include "seeds/text_index.hpp"
#include "seeds/tree.hpp"

namespace seeds {

struct Factor {
  Pos start = 0;
  Pos length = 0;
  [[nodiscard]] Pos end() const noexcept { return start + length - 1; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Greedy factorization of w[i..j]: every factor is a single letter or the
/// longest prefix of the rest that occurs entirely inside w[i..start-1].
using Factorization = std::vector<Factor>;

/// Longest previous non-overlapping factor for every position of `range`:
/// entry p - range.first is the longest prefix of w[p..range.last] occurring
/// inside w[range.first..p-1]. Sorts the suffixes of the subword and runs an
/// amortized extension scan with O(log N) range checks per step.
///
/// Throws std::invalid_argument on an empty range or one outside the text.
std::vector<Pos> compute_lpnf(const Text& text, Interval range);

/// Factorization from an LPnF table (factor length max(1, lpnf[p])).
Factorization factorize_from_lpnf(Interval range, const std::vector<Pos>& lpnf);

/// compute_lpnf followed by factorize_from_lpnf.
Factorization f_factorize(const Text& text, Interval range);

/// Factorization of tree.span() read off T(range) directly: the factor at p
/// follows leaf p's root path while the locus still has an occurrence
/// ending before p. Only factor starts are visited, so the cost is
/// O(N log sigma) without building a table.
Factorization f_factorize(const InducedTree& tree);

/// Number of factors lying entirely inside [i + 2*delta .. j - delta].
Pos middle_factor_count(const Factorization& factors, Interval range, Pos delta);

}  // namespace seeds
