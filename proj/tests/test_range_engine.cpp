#include <random>

#include "doctest.h"
#include "seeds/induced_tree.hpp"
#include "seeds/quasigap.hpp"
#include "seeds/range_engine.hpp"
#include "seeds/text_index.hpp"
#include "support.hpp"

using namespace seeds;
using namespace seeds::testing;

namespace {

struct NodeTruth {
  Pos gap;
  std::int64_t bound;
  Pos quasigap;
  Pos length;
};

std::vector<NodeTruth> truth(const InducedTree& t) {
  std::vector<NodeTruth> out(static_cast<std::size_t>(t.size()));
  const auto q = brute_quasigaps(t);
  for (NodeId v = 0; v < t.size(); ++v) {
    std::vector<Pos> occ;
    for (Pos r = t.begin_leaf(v); r < t.end_leaf(v); ++r) occ.push_back(t.leaf_pos(t.leaves()[r]));
    std::sort(occ.begin(), occ.end());
    const Pos parent = v == t.root() ? 0 : t.word_length(t.parent(v));
    out[v] = {maxgap(occ), quasigap_bound(t.first(v), t.last(v), maxgap(occ), parent, t.span()),
              q[v], t.word_length(v)};
  }
  return out;
}

// Checks window verdicts against the brute values; returns false on the
// first inconsistency.
bool window_sound(const InducedTree& t, Pos d, const std::vector<NodeTruth>& tr) {
  const auto win = window_quasigaps(t, d);
  for (NodeId v = 0; v < t.size(); ++v) {
    const auto& x = tr[v];
    const bool in_window = is_finite(x.quasigap) && x.quasigap >= d && x.quasigap <= 2 * d;
    switch (win[v].verdict) {
      case Verdict::Exact:
        if (win[v].value != x.quasigap) return false;
        break;
      case Verdict::Below:
        if (x.bound >= d) return false;
        if (is_finite(x.quasigap) ? x.quasigap >= d : x.length >= d) return false;
        break;
      case Verdict::Above:
        if (in_window || (is_finite(x.quasigap) && x.quasigap <= 2 * d)) return false;
        break;
    }
    if (in_window && win[v].verdict != Verdict::Exact) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("plausible and active nodes") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Word w = random_word(rng, n, 2);
    const TextIndex index(to_text(w));
    const InducedTree t = induce_root_tree(index);
    const Pos d = 1 + static_cast<Pos>(rng() % 16);
    const auto pl = find_plausible(t, d);
    CHECK(pl[t.root()]);
    for (NodeId v = 1; v < t.size(); ++v) {
      const bool direct = t.first(v) < 1 + 2 * d && t.last(v) > n - 4 * d + 1 &&
                          2 * d * (t.count(v) - 1) >= n - 6 * d + 2;
      REQUIRE(static_cast<bool>(pl[v]) == direct);
      if (pl[v]) REQUIRE(pl[t.parent(v)]);
    }
    const ActiveSet a = find_active(t, pl);
    CHECK(a.count <= 2 * (n / plausible_count_threshold(n, d)) + 2);
    CHECK(a.l1.size() == static_cast<std::size_t>(n));
    CHECK(a.l2.size() == static_cast<std::size_t>(n));
    for (NodeId v = 0; v < t.size(); ++v) {
      if (!pl[v]) CHECK(a.l1_of(v).empty());
      if (!a.active[v]) CHECK(a.l2_of(v).empty());
    }
  }
}

TEST_CASE("path of plausible nodes has two active ends") {
  // aaaaaaaa: every a^k is a node with one leaf child and one internal child
  const TextIndex index(Text::from_bytes("aaaaaaaa"));
  const InducedTree t = induce_root_tree(index);
  const auto pl = find_plausible(t, 1);
  const ActiveSet a = find_active(t, pl);
  Pos internal_active = 0;
  for (NodeId v = 0; v < t.size(); ++v) internal_active += a.active[v] && !t.is_leaf(v);
  CHECK(internal_active == 2);
}

TEST_CASE("restricted maxgaps agree with the naive scan") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 1500; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Word w = iter % 3 == 0 ? random_word(rng, n, 2) : [&] {
      Word u = random_word(rng, 1 + static_cast<int>(rng() % 5), 2);
      while (static_cast<int>(u.size()) < n) u.push_back(u[u.size() % (1 + rng() % u.size())]);
      return u;
    }();
    const TextIndex index(to_text(w));
    const InducedTree t = induce_root_tree(index);
    const auto tr = truth(t);
    for (Pos d = 1; d <= 16; ++d) {
      const auto pl = find_plausible(t, d);
      const auto mg = restricted_maxgaps(t, d, pl, find_active(t, pl));
      for (NodeId v = 0; v < t.size(); ++v) {
        if (!pl[v]) continue;
        const Pos g = tr[v].gap;
        if (g >= d && g <= 2 * d) {
          REQUIRE(mg[v] == RestrictedValue::exact(g));
        } else if (g < d) {
          REQUIRE(mg[v] == RestrictedValue::below());
        } else {
          REQUIRE(mg[v] == RestrictedValue::above());
        }
      }
    }
  }
}

TEST_CASE("window verdicts are sound on interval trees") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 600; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const Word w = random_word(rng, n, 2);
    const TextIndex index(to_text(w));
    const Pos a = 1 + static_cast<Pos>(rng() % n);
    const Pos b = a + static_cast<Pos>(rng() % (n - a + 1));
    const InducedTree t = induce_tree(index, {a, b});
    const auto tr = truth(t);
    for (Pos d = 1; d <= 16; ++d) REQUIRE(window_sound(t, d, tr));
  }
}

TEST_CASE("full range reproduces the brute quasigaps") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Word w = random_word(rng, n, 1 + static_cast<int>(rng() % 3));
    const TextIndex index(to_text(w));
    const InducedTree t = induce_root_tree(index);
    const auto q = brute_quasigaps(t);
    RangeStats stats;
    const auto got = compute_in_range(t, 1, n, &stats);
    for (NodeId v = 0; v < t.size(); ++v) {
      REQUIRE(got[v] == (is_finite(q[v]) ? RestrictedValue::exact(q[v]) : RestrictedValue::above()));
    }
    CHECK(stats.windows >= 1);
  }
}

TEST_CASE("worked example window") {
  const Word w = from_string("aaaaaabaaabaaabaaaa");
  const TextIndex index(to_text(w));
  const InducedTree t = induce_root_tree(index);
  const auto got = compute_in_range(t, 4, 8);
  bool found = false;
  for (NodeId v = 1; v < t.size(); ++v) {
    if (oracle::slice(w, t.rep(v), t.word_length(v)) == from_string("aaabaaa")) {
      CHECK(got[v] == RestrictedValue::exact(5));
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(compute_in_range(t, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(compute_in_range(t, 5, 4), std::invalid_argument);
}
