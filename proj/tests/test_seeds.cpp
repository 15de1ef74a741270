#include <random>
#include <set>

#include "doctest.h"
#include "seeds/predicates.hpp"
#include "seeds/seeds.hpp"
#include "support.hpp"

using namespace seeds;
using namespace seeds::testing;

namespace {

SolverConfig scaled() {
  SolverConfig c;
  c.constants = Constants{4, {1, 10}, {3, 10}};
  return c;
}

std::set<Word> seed_words(const Word& w, const SeedSet& s) {
  std::set<Word> out;
  s.enumerate([&](Pos pos, Pos len) {
    out.insert(oracle::slice(w, pos, len));
    return true;
  });
  return out;
}

// Both end conditions straight from their statement.
bool left_by_definition(const Word& w, int i1, int len) {
  if (i1 == 1) return true;
  for (int t = i1 - 1; t <= len - 1; ++t) {
    if (t >= 1 && oracle::slice(w, 1, t) == oracle::slice(w, i1 + len - t, t)) return true;
  }
  return false;
}

bool right_by_definition(const Word& w, int ik, int len) {
  const int n = static_cast<int>(w.size());
  if (ik + len - 1 >= n) return true;
  for (int s = n - ik - len + 1; s <= len - 1; ++s) {
    if (s >= 1 && oracle::slice(w, n - s + 1, s) == oracle::slice(w, ik, s)) return true;
  }
  return false;
}

const char* const kTieWord = "aaabaabaabaaabaaba";
const char* const kExampleWord = "aaaaaabaaabaaabaaaa";

}  // namespace

TEST_CASE("predicates on small examples") {
  const auto sp = [](const Word& v) { return std::span<const Symbol>(v.data(), v.size()); };
  const Word aba = from_string("aba");
  const Word ab = from_string("ab");
  const Word abaa = from_string("abaa");
  CHECK(is_cover(sp(aba), to_text(from_string("ababa"))));
  CHECK_FALSE(is_seed(sp(ab), to_text(from_string("aab"))));
  CHECK(is_seed(sp(abaa), to_text(from_string(kTieWord))));
  CHECK_FALSE(is_seed(sp(from_string("b")), to_text(from_string("aba"))));
  CHECK(oracle::brute_minimal_cover_count(aba, from_string("ababa")) == 2);
}

TEST_CASE("predicates agree with the oracles") {
  std::mt19937_64 rng(5);
  for (int len = 1; len <= 9; ++len) {
    for (const Word& w : all_words(2, len)) {
      const Text t = to_text(w);
      for (int p = 1; p <= len; ++p) {
        for (int l = 1; p + l - 1 <= len; ++l) {
          const Word v = oracle::slice(w, p, l);
          const std::span<const Symbol> vs(v.data(), v.size());
          REQUIRE(is_cover(vs, t) == oracle::brute_is_cover(v, w));
          REQUIRE(is_quasiseed(vs, t) == oracle::brute_is_quasiseed(v, w));
          REQUIRE(is_seed(vs, t) == oracle::brute_is_seed(v, w));
        }
      }
      // words that do not occur are never seeds
      const Word other = random_word(rng, 1 + static_cast<int>(rng() % len), 3);
      REQUIRE(is_seed(std::span<const Symbol>(other.data(), other.size()), t) ==
              oracle::brute_is_seed(other, w));
    }
  }
}

TEST_CASE("border conditions match their definitions") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Word w = random_word(rng, n, 1 + static_cast<int>(rng() % 3));
    const BorderFilter f(to_text(w));
    for (int i = 1; i <= n; ++i) {
      std::vector<int> ok_left;
      for (int len = 1; i + len - 1 <= n; ++len) {
        REQUIRE(f.left_ok(i, len) == left_by_definition(w, i, len));
        REQUIRE(f.right_ok(i, len) == right_by_definition(w, i, len));
        if (f.left_ok(i, len)) ok_left.push_back(len);
      }
      const int hi = n - i + 1;
      const int lo = 1 + static_cast<int>(rng() % hi);
      std::vector<int> runs;
      Pos prev_end = -1;
      f.left_runs(i, lo, hi, [&](Pos a, Pos b) {
        REQUIRE(a <= b);
        REQUIRE(a > prev_end + 1);  // maximal runs
        prev_end = b;
        for (Pos x = a; x <= b; ++x) runs.push_back(x);
      });
      std::erase_if(ok_left, [&](int x) { return x < lo; });
      REQUIRE(runs == ok_left);
      Pos expect = hi + 1;
      for (Pos len = hi; len >= lo; --len) {
        if (f.right_ok(i, len)) expect = len;
      }
      REQUIRE(f.right_from(i, lo, hi) == expect);
    }
  }
}

TEST_CASE("seed iff quasiseed and border seed") {
  for (int len = 1; len <= 12; ++len) {
    for (const Word& w : all_words(2, len)) {
      const BorderFilter f(to_text(w));
      std::set<Word> seen;
      for (int p = 1; p <= len; ++p) {
        for (int l = 1; p + l - 1 <= len; ++l) {
          const Word v = oracle::slice(w, p, l);
          if (!seen.insert(v).second) continue;
          const auto occ = oracle::occurrences(v, w);
          const bool combined = oracle::brute_is_quasiseed(v, w) &&
                                f.is_border_seed(occ.front(), occ.back(), l);
          REQUIRE(combined == oracle::brute_is_seed(v, w));
        }
      }
    }
  }
}

TEST_CASE("seeds of the small examples") {
  {
    const Analysis a(to_text(from_string(kTieWord)));
    const Word w = from_string(kTieWord);
    const auto [pos, len] = a.shortest_seed();
    CHECK(len == 4);
    // aaba (at 2) ties with abaa (at 3); the smallest position wins
    CHECK(oracle::slice(w, pos, len) == from_string("aaba"));
    std::set<Word> shortest;
    for (const auto& [p, l] : a.all_seeds().all_shortest()) shortest.insert(oracle::slice(w, p, l));
    CHECK(shortest == std::set<Word>{from_string("aaba"), from_string("abaa")});
  }
  {
    const Word w = from_string(kExampleWord);
    const Analysis a(to_text(w));
    const auto seeds = a.all_seeds();
    // Within the class of aaabaaa only the full word survives the border
    // filter. Longer seeds exist elsewhere, w itself among them.
    std::set<Word> in_class;
    for (const auto& r : seeds.ranges()) {
      if (oracle::slice(w, r.pos, r.hi) != from_string("aaabaaa")) continue;
      for (Pos l = r.lo; l <= r.hi; ++l) in_class.insert(oracle::slice(w, r.pos, l));
    }
    CHECK(in_class == std::set<Word>{from_string("aaabaaa")});
    CHECK(seed_words(w, seeds) == oracle::brute_all_seeds(w));
    CHECK(seeds.count() == 17);
    bool found = false;
    for (const auto& c : a.candidate_sets()) {
      if (oracle::slice(w, c.pos, c.hi) == from_string("aaabaaa")) {
        found = true;
        CHECK(c.lo == 5);
        CHECK(c.hi == 7);
      }
    }
    CHECK(found);
    const BorderFilter f(to_text(w));
    // aaaba and aaabaa start at 4 and end their last occurrence before n
    CHECK_FALSE(f.is_border_seed(4, 12, 5));
    CHECK_FALSE(f.is_border_seed(4, 12, 6));
    CHECK(f.is_border_seed(4, 12, 7));
  }
  {
    const Word w = from_string("abc");
    const Analysis a(to_text(w));
    CHECK(seed_words(w, a.all_seeds()) == std::set<Word>{w});
    CHECK(a.shortest_seed() == std::pair<Pos, Pos>{1, 3});
  }
}

TEST_CASE("candidate sets hold quasiseeds") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 300; ++iter) {
    const Word w = random_word(rng, 1 + static_cast<int>(rng() % 30), 2);
    const Analysis a(to_text(w));
    for (const auto& c : a.candidate_sets()) {
      REQUIRE(a.tree().word_length(a.tree().parent(c.node)) < c.lo);
      REQUIRE(c.lo <= c.hi);
      for (Pos l = c.lo; l <= c.hi; ++l) {
        REQUIRE(oracle::brute_is_quasiseed(oracle::slice(w, c.pos, l), w));
      }
    }
  }
  const Word unary = from_string("ab");
  const InducedTree t = Analysis(to_text(unary)).tree();
  CHECK(candidate_sets(t, QuasigapMap(static_cast<std::size_t>(t.size()), kInfiniteGap)).empty());
}

TEST_CASE("all seeds match brute force") {
  for (int len = 1; len <= 12; ++len) {
    for (const Word& w : all_words(2, len)) {
      for (const auto& config : {SolverConfig{}, scaled()}) {
        const Analysis a(to_text(w), config);
        const auto seeds = a.all_seeds();
        const auto words = seed_words(w, seeds);
        REQUIRE(static_cast<std::int64_t>(words.size()) == seeds.count());
        REQUIRE(words == oracle::brute_all_seeds(w));
        REQUIRE(words.count(w) == 1);
      }
    }
  }
}

TEST_CASE("shortest seed on random words") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 400; ++iter) {
    const Word w = random_word(rng, 1 + static_cast<int>(rng() % 60), 1 + static_cast<int>(rng() % 3));
    const Analysis a(to_text(w), scaled());
    const auto brute = oracle::brute_all_seeds(w);
    std::size_t best = w.size();
    for (const auto& s : brute) best = std::min(best, s.size());
    const auto [pos, len] = a.shortest_seed();
    REQUIRE(static_cast<std::size_t>(len) == best);
    REQUIRE(brute.count(oracle::slice(w, pos, len)) == 1);
    REQUIRE(seed_words(w, a.all_seeds()) == brute);
  }
}
