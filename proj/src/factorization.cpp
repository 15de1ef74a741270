#include "seeds/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seeds {
namespace {

void check_range(const Text& text, Interval range) {
  if (range.empty() || range.first < 1 || range.last > text.size()) {
    throw std::invalid_argument("factorization range [" + std::to_string(range.first) + ".." +
                                std::to_string(range.last) + "] is empty or outside the text");
  }
}

}  // namespace

std::vector<Pos> compute_lpnf(const Text& text, Interval range) {
  check_range(text, range);
  const Pos n = range.length();
  const auto sym = text.symbols().subspan(static_cast<std::size_t>(range.first - 1),
                                          static_cast<std::size_t>(n));
  const SuffixArray sa = build_suffix_array(Text(std::vector<Symbol>(sym.begin(), sym.end())));
  std::vector<Pos> rank(static_cast<std::size_t>(n) + 2);
  for (Pos r = 0; r <= n; ++r) rank[sa.order[r]] = r;
  const RangeMin<Pos> lcp_min(sa.lcp);
  const RangeMin<Pos> start_min(sa.order);

  // Does the length-len prefix of local suffix q occur ending before q?
  auto feasible = [&](Pos q, Pos len) {
    const Pos r = rank[q];
    Pos lo = r;
    {
      Pos a = 0;
      Pos b = r;  // smallest lo with min lcp[lo+1..r] >= len
      while (a < b) {
        const Pos mid = a + (b - a) / 2;
        if (lcp_min.value(static_cast<std::size_t>(mid) + 1, static_cast<std::size_t>(r)) >= len) {
          b = mid;
        } else {
          a = mid + 1;
        }
      }
      lo = a;
    }
    Pos hi = r;
    {
      Pos a = r;
      Pos b = n;  // largest hi with min lcp[r+1..hi] >= len
      while (a < b) {
        const Pos mid = a + (b - a + 1) / 2;
        if (lcp_min.value(static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(mid)) >= len) {
          a = mid;
        } else {
          b = mid - 1;
        }
      }
      hi = a;
    }
    const Pos s = start_min.value(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
    return s + len - 1 <= q - 1;
  };

  std::vector<Pos> out(static_cast<std::size_t>(n), 0);
  Pos len = 0;
  for (Pos q = 1; q <= n; ++q) {
    len = std::max<Pos>(0, len - 1);
    while (q + len <= n && feasible(q, len + 1)) ++len;
    out[q - 1] = len;
  }
  return out;
}

Factorization factorize_from_lpnf(Interval range, const std::vector<Pos>& lpnf) {
  Factorization out;
  for (Pos p = range.first; p <= range.last;) {
    const Pos len = std::max<Pos>(1, lpnf[static_cast<std::size_t>(p - range.first)]);
    out.push_back({p, len});
    p += len;
  }
  return out;
}

Factorization f_factorize(const Text& text, Interval range) {
  return factorize_from_lpnf(range, compute_lpnf(text, range));
}

Factorization f_factorize(const InducedTree& tree) {
  const Interval range = tree.span();
  const NodeId size = tree.size();

  // Children of every node in preorder, for binary search by leaf id.
  std::vector<NodeId> head(static_cast<std::size_t>(size) + 1, 0);
  for (NodeId v = 1; v < size; ++v) ++head[tree.parent(v) + 1];
  for (NodeId v = 0; v < size; ++v) head[v + 1] += head[v];
  std::vector<NodeId> kids(static_cast<std::size_t>(head[size]));
  {
    std::vector<NodeId> fill(head.begin(), head.end() - 1);
    for (NodeId v = 1; v < size; ++v) kids[fill[tree.parent(v)]++] = v;
  }
  auto child_towards = [&](NodeId x, NodeId leaf) {
    const auto b = kids.begin() + head[x];
    const auto e = kids.begin() + head[x + 1];
    return *(std::upper_bound(b, e, leaf) - 1);
  };

  Factorization out;
  for (Pos p = range.first; p <= range.last;) {
    const NodeId leaf = tree.leaf_of(p);
    const Pos cap = range.last - p + 1;
    Pos len = 0;
    NodeId x = tree.root();
    while (x != leaf) {
      const NodeId c = child_towards(x, leaf);
      // loci on the edge into c share first(c); lengths up to p - first(c)
      // still end before p
      const Pos reach = std::min({tree.word_length(c), p - tree.first(c), cap});
      if (reach <= tree.word_length(x)) break;
      len = reach;
      if (reach < tree.word_length(c)) break;
      x = c;
    }
    len = std::max<Pos>(1, len);
    out.push_back({p, len});
    p += len;
  }
  return out;
}

Pos middle_factor_count(const Factorization& factors, Interval range, Pos delta) {
  const std::int64_t lo = static_cast<std::int64_t>(range.first) + 2 * static_cast<std::int64_t>(delta);
  const std::int64_t hi = static_cast<std::int64_t>(range.last) - delta;
  Pos g = 0;
  for (const Factor& f : factors) {
    if (f.start >= lo && f.end() <= hi) ++g;
  }
  return g;
}

}  // namespace seeds
