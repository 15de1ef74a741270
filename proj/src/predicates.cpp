#include "seeds/predicates.hpp"

#include <algorithm>

namespace seeds {
namespace {

struct OccurrenceSummary {
  Pos first = 0;  // 0 when v does not occur
  Pos last = 0;
  Pos widest_gap = 0;
};

// Occurrences of v in w via the Z-function of v, sep, w.
OccurrenceSummary summarize(std::span<const Symbol> v, const Text& w) {
  OccurrenceSummary out;
  const auto m = static_cast<Pos>(v.size());
  if (m == 0 || m > w.size()) return out;
  std::vector<Symbol> s(v.begin(), v.end());
  s.push_back(-1);
  s.insert(s.end(), w.symbols().begin(), w.symbols().end());
  const auto z = z_function(s);
  for (Pos p = 1; p + m - 1 <= w.size(); ++p) {
    if (z[static_cast<std::size_t>(m + p)] < m) continue;
    if (out.first == 0) out.first = p;
    else out.widest_gap = std::max(out.widest_gap, p - out.last);
    out.last = p;
  }
  return out;
}

// Some t in [need, |v| - 1] has w[1..t] equal to the length-t suffix of v.
bool overhang(std::span<const Symbol> v, std::span<const Symbol> w, Pos need) {
  const auto m = static_cast<Pos>(v.size());
  if (need <= 0) return true;
  std::vector<Symbol> s(w.begin(), w.end());
  s.push_back(-1);
  s.insert(s.end(), v.begin(), v.end());
  const auto z = z_function(s);
  const auto base = static_cast<Pos>(w.size()) + 1;
  for (Pos t = need; t <= m - 1; ++t) {
    if (z[static_cast<std::size_t>(base + m - t)] >= t) return true;
  }
  return false;
}

}  // namespace

std::vector<Pos> z_function(std::span<const Symbol> s) {
  const auto n = static_cast<Pos>(s.size());
  std::vector<Pos> z(s.size(), 0);
  if (n == 0) return z;
  z[0] = n;
  for (Pos k = 1, l = 0, r = 0; k < n; ++k) {
    if (k < r) z[k] = std::min(r - k, z[k - l]);
    while (k + z[k] < n && s[z[k]] == s[k + z[k]]) ++z[k];
    if (k + z[k] > r) {
      l = k;
      r = k + z[k];
    }
  }
  return z;
}

bool is_cover(std::span<const Symbol> v, const Text& w) {
  const auto o = summarize(v, w);
  const auto m = static_cast<Pos>(v.size());
  return o.first == 1 && o.widest_gap <= m && o.last + m - 1 == w.size();
}

bool is_quasiseed(std::span<const Symbol> v, const Text& w) {
  const auto o = summarize(v, w);
  const auto m = static_cast<Pos>(v.size());
  return o.first != 0 && o.widest_gap <= m && o.first - 1 < m && w.size() - (o.last + m - 1) < m;
}

bool is_seed(std::span<const Symbol> v, const Text& w) {
  const auto o = summarize(v, w);
  const auto m = static_cast<Pos>(v.size());
  if (o.first == 0 || o.widest_gap > m) return false;
  if (!overhang(v, w.symbols(), o.first - 1)) return false;
  const std::vector<Symbol> rv(v.rbegin(), v.rend());
  const std::vector<Symbol> rw(w.symbols().rbegin(), w.symbols().rend());
  return overhang(rv, rw, w.size() - (o.last + m - 1));
}

}  // namespace seeds
