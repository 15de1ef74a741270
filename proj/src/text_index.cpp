#include "seeds/text_index.hpp"

#include <algorithm>
#include <string>

namespace seeds {
namespace {

// SA-IS after Nong, Zhang and Chan. `s` has length n with a unique smallest
// symbol 0 at s[n-1]; all symbols are in [0, k).
void sais_rec(const Symbol* s, Pos* sa, Pos n, Symbol k) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> stype(static_cast<std::size_t>(n));
  stype[n - 1] = true;
  for (Pos i = n - 2; i >= 0; --i) {
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  }
  auto is_lms = [&](Pos i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<Pos> count(static_cast<std::size_t>(k), 0);
  for (Pos i = 0; i < n; ++i) ++count[s[i]];
  std::vector<Pos> bucket(static_cast<std::size_t>(k));
  auto bucket_heads = [&] {
    Pos sum = 0;
    for (Symbol c = 0; c < k; ++c) {
      bucket[c] = sum;
      sum += count[c];
    }
  };
  auto bucket_tails = [&] {
    Pos sum = 0;
    for (Symbol c = 0; c < k; ++c) {
      sum += count[c];
      bucket[c] = sum;
    }
  };
  auto induce = [&] {
    bucket_heads();
    for (Pos i = 0; i < n; ++i) {
      const Pos j = sa[i] - 1;
      if (sa[i] > 0 && !stype[j]) sa[bucket[s[j]]++] = j;
    }
    bucket_tails();
    for (Pos i = n - 1; i >= 0; --i) {
      const Pos j = sa[i] - 1;
      if (sa[i] > 0 && stype[j]) sa[--bucket[s[j]]] = j;
    }
  };

  std::fill(sa, sa + n, -1);
  bucket_tails();
  for (Pos i = 1; i < n; ++i) {
    if (is_lms(i)) sa[--bucket[s[i]]] = i;
  }
  induce();

  Pos n1 = 0;
  for (Pos i = 0; i < n; ++i) {
    if (is_lms(sa[i])) sa[n1++] = sa[i];
  }
  std::fill(sa + n1, sa + n, -1);
  Symbol names = 0;
  Pos prev = -1;
  for (Pos i = 0; i < n1; ++i) {
    const Pos pos = sa[i];
    bool diff = false;
    for (Pos d = 0; d < n; ++d) {
      if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
        diff = true;
        break;
      }
      if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
    }
    if (diff) {
      ++names;
      prev = pos;
    }
    sa[n1 + pos / 2] = names - 1;
  }
  for (Pos i = n - 1, j = n - 1; i >= n1; --i) {
    if (sa[i] >= 0) sa[j--] = sa[i];
  }

  Pos* s1 = sa + n - n1;
  Pos* sa1 = sa;
  if (names < n1) {
    sais_rec(s1, sa1, n1, names);
  } else {
    for (Pos i = 0; i < n1; ++i) sa1[s1[i]] = i;
  }

  bucket_tails();
  for (Pos i = 1, j = 0; i < n; ++i) {
    if (is_lms(i)) s1[j++] = i;
  }
  for (Pos i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
  std::fill(sa + n1, sa + n, -1);
  for (Pos i = n1 - 1; i >= 0; --i) {
    const Pos j = sa[i];
    sa[i] = -1;
    sa[--bucket[s[j]]] = j;
  }
  induce();
}

}  // namespace

std::vector<Pos> sais(const std::vector<Symbol>& s, Symbol alphabet) {
  std::vector<Pos> sa(s.size());
  if (!s.empty()) sais_rec(s.data(), sa.data(), static_cast<Pos>(s.size()), alphabet);
  return sa;
}

SuffixArray build_suffix_array(const Text& text) {
  if (text.empty()) throw TextError("cannot index an empty text");
  const Pos n = text.size();

  // Remap symbols to dense ranks 1..sigma; 0 is the end marker.
  std::vector<Symbol> s(static_cast<std::size_t>(n) + 1);
  Symbol sigma = 0;
  if (text.alphabet_bound() <= 4 * static_cast<std::int64_t>(n) + 256) {
    std::vector<Symbol> used(static_cast<std::size_t>(text.alphabet_bound()), 0);
    for (Symbol c : text.symbols()) used[c] = 1;
    for (auto& u : used) u = u != 0 ? ++sigma : 0;
    for (Pos i = 0; i < n; ++i) s[i] = used[text[i + 1]];
  } else {
    std::vector<Symbol> values(text.symbols().begin(), text.symbols().end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    sigma = static_cast<Symbol>(values.size());
    for (Pos i = 0; i < n; ++i) {
      s[i] = static_cast<Symbol>(std::lower_bound(values.begin(), values.end(), text[i + 1]) -
                                 values.begin()) + 1;
    }
  }
  s[n] = 0;

  SuffixArray out;
  out.order = sais(s, sigma + 1);
  for (auto& p : out.order) ++p;

  // Kasai.
  std::vector<Pos> rank(static_cast<std::size_t>(n) + 2);
  for (Pos r = 0; r <= n; ++r) rank[out.order[r]] = r;
  out.lcp.assign(static_cast<std::size_t>(n) + 1, 0);
  Pos h = 0;
  for (Pos p = 1; p <= n; ++p) {
    const Pos r = rank[p];
    if (r == 0) continue;
    const Pos q = out.order[r - 1];
    while (p + h <= n && q + h <= n && text[p + h] == text[q + h]) ++h;
    out.lcp[r] = h;
    if (h > 0) --h;
  }
  return out;
}

InducedTree build_suffix_tree(const Text& text, const SuffixArray& sa) {
  const Pos n = text.size();
  TreeBuilder builder({1, n + 1}, n, kNoNode, static_cast<std::size_t>(n) + 1);
  for (Pos r = 0; r <= n; ++r) builder.add_leaf(sa.order[r], sa.lcp[r]);
  return std::move(builder).finish();
}

InducedTree build_root_tree(const Text& text, const SuffixArray& sa) {
  const Pos n = text.size();
  TreeBuilder builder({1, n}, n, kNoNode, static_cast<std::size_t>(n));
  // order[0] is the end marker; every other suffix starts with a symbol
  for (Pos r = 1; r <= n; ++r) builder.add_leaf(sa.order[r], r == 1 ? 0 : sa.lcp[r]);
  return std::move(builder).finish();
}

TextIndex::TextIndex(Text text) : text_(std::move(text)), sa_(build_suffix_array(text_)) {
  const Pos n = text_.size();
  rank_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (Pos r = 0; r <= n; ++r) rank_[sa_.order[r]] = r;
  lcp_min_ = RangeMin<Pos>(sa_.lcp);
  tree_ = build_suffix_tree(text_, sa_);
  lca_ = LcaIndex(tree_);
}

Pos TextIndex::lce(Pos i, Pos j) const {
  const Pos n = this->n();
  if (i < 1 || j < 1 || i > n || j > n) {
    throw std::out_of_range("lce: position out of range (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
  if (i == j) return n - i + 1;
  const Pos a = std::min(rank_[i], rank_[j]);
  const Pos b = std::max(rank_[i], rank_[j]);
  return lcp_min_.value(static_cast<std::size_t>(a) + 1, static_cast<std::size_t>(b));
}

}  // namespace seeds
