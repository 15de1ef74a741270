#include <random>

#include "doctest.h"
#include "seeds/staircase.hpp"
#include "support.hpp"

using namespace seeds;
using namespace seeds::testing;

TEST_CASE("staircase shapes") {
  CHECK(build_staircase({1, 10}, 2) == std::vector<Interval>{{1, 6}, {3, 8}, {5, 10}});
  CHECK(build_staircase({1, 10}, 3) == std::vector<Interval>{{1, 9}, {4, 10}});
  CHECK(build_staircase({5, 12}, 3) == std::vector<Interval>{{5, 12}});
  CHECK(build_staircase({1, 10}, 20) == std::vector<Interval>{{1, 10}});
  CHECK_THROWS_AS(build_staircase({1, 10}, 0), std::invalid_argument);
}

TEST_CASE("staircase covers the range with 2m overlaps") {
  for (Pos i = 1; i <= 4; ++i) {
    for (Pos n = 1; n <= 80; ++n) {
      for (Pos m = 1; m <= 12; ++m) {
        const Interval range{i, i + n - 1};
        const auto s = build_staircase(range, m);
        REQUIRE(s.front().first == range.first);
        REQUIRE(s.back().last == range.last);
        for (std::size_t k = 0; k < s.size(); ++k) {
          REQUIRE(s[k].length() <= 3 * m);
          if (k + 1 < s.size()) {
            REQUIRE(s[k].last - s[k + 1].first + 1 == 2 * m);
          }
        }
      }
    }
  }
}

TEST_CASE("reduction keeps intervals crossing a factor boundary") {
  // all singleton factors: every extension of length >= 2 crosses one
  const Text text = Text::from_bytes("abcdefghijkl");
  const Interval range{1, 12};
  const auto f = f_factorize(text, range);
  REQUIRE(f.size() == 12);
  const auto s = build_staircase(range, 2);
  CHECK(reduce_staircase(s, f, 2, range, TailPolicy::Clamp) == s);

  // the copied half is one factor, so intervals starting there are dropped
  const std::string half = "abcdefghijklmnopqrstu";
  const Text rep = Text::from_bytes(half + half);
  const auto g = f_factorize(rep, {1, 42});
  REQUIRE(g.size() == 22);
  CHECK(g.back() == Factor{22, 21});
  const auto stairs = build_staircase({1, 42}, 3);
  const auto kept = reduce_staircase(stairs, g, 3, {1, 42}, TailPolicy::Clamp);
  CHECK(kept.size() == 7);
  CHECK(kept.back() == Interval{19, 27});
  const auto tail = reduce_staircase(stairs, g, 3, {1, 42}, TailPolicy::KeepTail);
  CHECK(tail.size() == 8);
  CHECK(tail.back() == Interval{34, 42});
}

TEST_CASE("reduced staircase size is bounded by the factor count") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 3000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 300);
    const bool periodic = iter % 2 == 1;
    Word w = random_word(rng, periodic ? 1 + static_cast<int>(rng() % 6) : n, 2);
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() % (w.size() / 2 + 1)]);
    const Text text = to_text(w);
    const Interval range{1, n};
    const auto f = f_factorize(text, range);
    const Pos m = 1 + static_cast<Pos>(rng() % (n / 3 + 1));
    const auto kept = reduce_staircase(build_staircase(range, m), f, m, range, TailPolicy::Clamp);
    CHECK(kept.size() <= 4 * (f.size() - 1) + (f.size() == 1 ? 1 : 0));
  }
}
