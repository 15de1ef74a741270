#include <random>

#include "doctest.h"
#include "seeds/families.hpp"
#include "seeds/induced_tree.hpp"
#include "seeds/main_algorithm.hpp"
#include "seeds/text_index.hpp"
#include "support.hpp"

using namespace seeds;
using namespace seeds::testing;

namespace {

SolverConfig scaled(TailPolicy tail = TailPolicy::KeepTail) {
  SolverConfig c;
  c.constants = Constants{4, {1, 10}, {3, 10}};
  c.tail = tail;
  return c;
}

Word periodic_word(std::mt19937_64& rng, int n, int sigma) {
  Word w = random_word(rng, 1 + static_cast<int>(rng() % 7), sigma);
  while (static_cast<int>(w.size()) < n) {
    w.push_back(rng() % 9 == 0 ? 'a' + static_cast<int>(rng() % sigma) : w[w.size() - (1 + rng() % 3) % w.size()]);
  }
  return w;
}

}  // namespace

TEST_CASE("worked example") {
  const Word w = from_string("aaaaaabaaabaaabaaaa");
  const TextIndex index(to_text(w));
  const InducedTree t = induce_root_tree(index);
  for (const auto& config : {SolverConfig{}, scaled()}) {
    SolverStats stats;
    const auto q = by_word(w, t, all_quasigaps(t, config, &stats));
    CHECK(q.at(from_string("aaabaaa")) == 5);
    CHECK(q == oracle::brute_quasigap_map(w));
  }
}

TEST_CASE("scaled constants recurse and match brute force on short words") {
  SolverStats stats;
  for (int len = 1; len <= 12; ++len) {
    for (const Word& w : all_words(2, len)) {
      const TextIndex index(to_text(w));
      const InducedTree t = induce_root_tree(index);
      REQUIRE(by_word(w, t, all_quasigaps(t, scaled(), &stats)) == oracle::brute_quasigap_map(w));
    }
  }
  CHECK(stats.max_depth >= 1);
  CHECK(stats.merge.paths > 0);
  CHECK(stats.check_failures == 0);
}

TEST_CASE("both tail policies on longer words") {
  std::mt19937_64 rng(53);
  std::int64_t clamp_mismatch = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 200);
    const Word w = iter % 2 == 0 ? random_word(rng, n, 2) : periodic_word(rng, n, 2);
    const TextIndex index(to_text(w));
    const InducedTree t = induce_root_tree(index);
    const auto expect = brute_quasigaps(t);
    SolverConfig keep = scaled(TailPolicy::KeepTail);
    keep.self_check = true;
    SolverStats stats;
    REQUIRE(all_quasigaps(t, keep, &stats) == expect);
    CHECK(stats.check_failures == 0);
    if (all_quasigaps(t, scaled(TailPolicy::Clamp)) != expect) ++clamp_mismatch;
  }
  MESSAGE("clamped tail mismatches: " << clamp_mismatch);
}

TEST_CASE("clamping the last extensions at the range end loses values") {
  // the clamped rule drops intervals near j whose values depend on letters
  // after j; b^27 is one witness under the scaled constants
  const Word w(27, 'b');
  const TextIndex index(to_text(w));
  const InducedTree t = induce_root_tree(index);
  const auto expect = brute_quasigaps(t);
  CHECK(all_quasigaps(t, scaled(TailPolicy::Clamp)) != expect);
  CHECK(all_quasigaps(t, scaled(TailPolicy::KeepTail)) == expect);
}

TEST_CASE("work counters stay within a fixed budget per symbol") {
  for (const Family f : {Family::Random, Family::Fibonacci, Family::ThueMorse, Family::Periodic}) {
    for (Pos n = 1 << 12; n <= 1 << 16; n *= 2) {
      const TextIndex index(make_family_word(f, n, 3));
      const InducedTree t = induce_root_tree(index);
      SolverStats st;
      (void)all_quasigaps(t, {}, &st);
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(st.range.bucket_updates + st.range.bucket_scans <= std::int64_t{400} * n);
      CHECK(st.merge.paths + st.merge.finds <= std::int64_t{16} * n);
      CHECK(st.fallbacks == 0);
    }
  }
}
