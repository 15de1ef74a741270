#include "seeds_oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace seeds::oracle {
namespace {

void guard(const Word& w) {
  if (w.size() > static_cast<std::size_t>(kMaxOracleLength)) {
    throw std::length_error("oracle input longer than kMaxOracleLength");
  }
}

// Does v match w at 1-based start p (fully inside w)?
bool matches_at(const Word& v, const Word& w, int p) {
  const int m = static_cast<int>(v.size());
  const int n = static_cast<int>(w.size());
  if (p < 1 || p + m - 1 > n) return false;
  for (int k = 0; k < m; ++k) {
    if (w[p - 1 + k] != v[k]) return false;
  }
  return true;
}

// Every position of w[a..b] lies inside an occurrence of v contained in w[a..b].
bool covers_range(const Word& v, const Word& w, int a, int b) {
  const int m = static_cast<int>(v.size());
  if (b - a + 1 < m) return false;
  int reach = a - 1;
  for (int p = a; p + m - 1 <= b; ++p) {
    if (!matches_at(v, w, p)) continue;
    if (p > reach + 1) return false;
    reach = p + m - 1;
  }
  return reach == b;
}

}  // namespace

Word word_of(const char* s) {
  Word w;
  for (const char* c = s; *c != '\0'; ++c) w.push_back(static_cast<unsigned char>(*c));
  return w;
}

Word slice(const Word& w, int pos, int len) {
  return Word(w.begin() + (pos - 1), w.begin() + (pos - 1 + len));
}

std::vector<int> occurrences(const Word& v, const Word& w) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (matches_at(v, w, p)) out.push_back(p);
  }
  return out;
}

bool brute_is_cover(const Word& v, const Word& w) {
  guard(w);
  if (v.empty() || w.empty()) return false;
  return covers_range(v, w, 1, static_cast<int>(w.size()));
}

bool brute_is_seed(const Word& v, const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(v.size());
  if (m == 0 || m > n) return false;
  if (occurrences(v, w).empty()) return false;
  std::vector<int> diff(static_cast<std::size_t>(n) + 2, 0);
  for (int p = 2 - m; p <= n; ++p) {
    bool agree = true;
    for (int k = 0; k < m && agree; ++k) {
      const int q = p + k;
      if (q >= 1 && q <= n && w[q - 1] != v[k]) agree = false;
    }
    if (!agree) continue;
    ++diff[std::max(1, p)];
    --diff[std::min(n, p + m - 1) + 1];
  }
  int run = 0;
  for (int q = 1; q <= n; ++q) {
    run += diff[q];
    if (run == 0) return false;
  }
  return true;
}

bool brute_is_quasiseed(const Word& v, const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(v.size());
  if (m == 0 || m > n) return false;
  for (int x = 0; x < m; ++x) {
    for (int z = 0; z < m; ++z) {
      if (covers_range(v, w, x + 1, n - z)) return true;
    }
  }
  return false;
}

std::map<Word, int> brute_quasigap_map(const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  std::map<Word, std::vector<int>> occ;
  for (int p = 1; p <= n; ++p) {
    for (int len = 1; p + len - 1 <= n; ++len) {
      Word v = slice(w, p, len);
      if (occ.count(v) == 0) occ.emplace(v, occurrences(v, w));
    }
  }
  // Per class: (longest word, shortest quasiseed length).
  std::map<std::vector<int>, std::pair<Word, int>> classes;
  for (const auto& [v, starts] : occ) {
    auto& entry = classes[starts];
    if (v.size() > entry.first.size()) entry.first = v;
    if (entry.second == 0) entry.second = kInfinity;
    if (brute_is_quasiseed(v, w)) entry.second = std::min(entry.second, static_cast<int>(v.size()));
  }
  std::map<Word, int> out;
  for (const auto& [starts, entry] : classes) out.emplace(entry.first, entry.second);
  return out;
}

std::set<Word> brute_all_seeds(const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  std::set<Word> seen;
  std::set<Word> out;
  for (int p = 1; p <= n; ++p) {
    for (int len = 1; p + len - 1 <= n; ++len) {
      Word v = slice(w, p, len);
      if (!seen.insert(v).second) continue;
      if (brute_is_seed(v, w)) out.insert(v);
    }
  }
  return out;
}

int brute_maxgap(const std::vector<int>& sorted) {
  int best = 0;
  for (std::size_t k = 1; k < sorted.size(); ++k) best = std::max(best, sorted[k] - sorted[k - 1]);
  return best;
}

int brute_minimal_cover_count(const Word& v, const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(v.size());
  const auto starts = occurrences(v, w);
  int covered = 0;
  int count = 0;
  std::size_t k = 0;
  while (covered < n) {
    int best = -1;
    while (k < starts.size() && starts[k] <= covered + 1) best = starts[k++];
    if (best < 0 || best + m - 1 <= covered) return -1;
    covered = best + m - 1;
    ++count;
  }
  return count;
}

std::vector<int> naive_lpnf(const Word& w, int first, int last) {
  guard(w);
  std::vector<int> out;
  for (int p = first; p <= last; ++p) {
    int best = 0;
    for (int s = first; s < p; ++s) {
      int len = 0;
      while (p + len <= last && s + len <= p - 1 && w[s + len - 1] == w[p + len - 1]) ++len;
      best = std::max(best, len);
    }
    out.push_back(best);
  }
  return out;
}

std::vector<std::pair<int, int>> naive_f_factorization(const Word& w, int first, int last) {
  const auto lpnf = naive_lpnf(w, first, last);
  std::vector<std::pair<int, int>> out;
  for (int p = first; p <= last;) {
    const int len = std::max(1, lpnf[p - first]);
    out.emplace_back(p, len);
    p += len;
  }
  return out;
}

int exhaustive_min_factor_count(const Word& w) {
  guard(w);
  const int n = static_cast<int>(w.size());
  std::vector<int> best(static_cast<std::size_t>(n) + 1, INT32_MAX);
  best[0] = 0;
  for (int i = 0; i < n; ++i) {
    if (best[i] == INT32_MAX) continue;
    for (int j = i + 1; j <= n; ++j) {
      // factor w[i+1..j]: a single letter, or a subword of w[1..i]
      bool ok = j == i + 1;
      if (!ok) {
        const Word f = slice(w, i + 1, j - i);
        const Word prefix = slice(w, 1, i);
        ok = !occurrences(f, prefix).empty();
      }
      if (ok) best[j] = std::min(best[j], best[i] + 1);
    }
  }
  return best[n];
}

std::vector<NaiveNode> naive_induced_tree(const Word& w, int first, int last) {
  guard(w);
  const int n = static_cast<int>(w.size());
  auto suffix = [&](int p) {
    Word s(w.begin() + (p - 1), w.end());
    s.push_back(-1);
    return s;
  };
  auto lcp = [&](int p, int q) {
    const Word a = suffix(p);
    const Word b = suffix(q);
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  };
  std::map<std::pair<int, std::vector<int>>, int> nodes;  // (depth, leaves) -> word length
  std::vector<int> all;
  for (int p = first; p <= last; ++p) all.push_back(p);
  nodes[{0, all}] = 0;
  for (int p = first; p <= last; ++p) {
    nodes[{n - p + 2, {p}}] = n - p + 1;
    for (int q = first; q <= last; ++q) {
      if (q == p) continue;
      const int d = lcp(p, q);
      std::vector<int> leaves;
      for (int r = first; r <= last; ++r) {
        if (r == p || lcp(p, r) >= d) leaves.push_back(r);
      }
      nodes[{d, leaves}] = d;
    }
  }
  std::vector<NaiveNode> out;
  for (const auto& [key, wl] : nodes) out.push_back({key.first, wl, -1, key.second});
  for (auto& v : out) {
    for (const auto& u : out) {
      if (u.depth >= v.depth) continue;
      if (std::includes(u.leaves.begin(), u.leaves.end(), v.leaves.begin(), v.leaves.end())) {
        v.parent_depth = std::max(v.parent_depth, u.depth);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NaiveNode& a, const NaiveNode& b) {
    return std::pair(a.depth, a.leaves.front()) < std::pair(b.depth, b.leaves.front());
  });
  return out;
}

std::map<std::pair<int, int>, int> naive_interval_quasigaps(const Word& w, int first, int last) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& v : naive_induced_tree(w, first, last)) {
    int value = kInfinity;
    if (v.parent_depth >= 0) {
      const int l1 = v.leaves.front();
      const int l2 = v.leaves.back();
      const int tail = (last - l2 + 1) / 2 + 1;  // ceil((last - l2) / 2) + 1
      const int m = std::max({brute_maxgap(v.leaves), l1 - first + 1, tail, v.parent_depth + 1});
      if (m <= v.word_length) value = m;
    }
    out[{v.depth, v.leaves.front()}] = value;
  }
  return out;
}

std::vector<std::int64_t> naive_tree_path_max(const std::vector<int>& parent,
                                              const std::vector<PathSpec>& paths) {
  std::vector<std::int64_t> out(parent.size(), INT64_MIN);
  for (const auto& p : paths) {
    for (int x = p.v; x != p.u; x = parent[x]) {
      if (x < 0) throw std::invalid_argument("path end is not an ancestor");
      out[x] = std::max(out[x], p.weight);
    }
  }
  return out;
}

std::vector<std::int64_t> naive_tree_path_sum(const std::vector<int>& parent,
                                              const std::vector<PathSpec>& paths) {
  std::vector<std::int64_t> out(parent.size(), 0);
  for (const auto& p : paths) {
    for (int x = p.v; x != p.u; x = parent[x]) {
      if (x < 0) throw std::invalid_argument("path end is not an ancestor");
      out[x] += p.weight;
    }
  }
  return out;
}

}  // namespace seeds::oracle
