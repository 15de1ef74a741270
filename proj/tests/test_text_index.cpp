#include <random>

#include "doctest.h"
#include "seeds/induced_tree.hpp"
#include "seeds/text_index.hpp"
#include "support.hpp"

using namespace seeds;
using namespace seeds::testing;

TEST_CASE("suffix array of small words") {
  const auto sa = build_suffix_array(Text::from_bytes("banana"));
  CHECK(sa.order == std::vector<Pos>{7, 6, 4, 2, 1, 5, 3});
  CHECK(sa.lcp == std::vector<Pos>{0, 0, 1, 3, 0, 0, 2});

  const auto aaa = build_suffix_array(Text::from_bytes("aaa"));
  CHECK(aaa.order == std::vector<Pos>{4, 3, 2, 1});
  CHECK(aaa.lcp == std::vector<Pos>{0, 0, 1, 2});

  CHECK_THROWS_AS(build_suffix_array(Text{}), TextError);
}

TEST_CASE("suffix array matches sorting on random texts") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const Word w = random_word(rng, n, 1 + static_cast<int>(rng() % 4));
    std::vector<Pos> expect(n + 1);
    for (int p = 0; p <= n; ++p) expect[p] = p + 1;
    std::sort(expect.begin(), expect.end(), [&](Pos a, Pos b) {
      // the end marker sorts below every symbol
      return std::lexicographical_compare(w.begin() + (a - 1), w.end(), w.begin() + (b - 1), w.end());
    });
    const auto sa = build_suffix_array(to_text(w));
    REQUIRE(sa.order == expect);
  }
}

TEST_CASE("huge token alphabets are remapped") {
  const Text t(std::vector<Symbol>{1000000000, 5, 1000000000, 5});
  const auto sa = build_suffix_array(t);
  CHECK(sa.order == std::vector<Pos>{5, 4, 2, 3, 1});
}

TEST_CASE("longest common extensions") {
  const TextIndex index(Text::from_bytes("abaababa"));
  CHECK(index.lce(1, 4) == 3);
  CHECK(index.lce(1, 6) == 3);
  CHECK(index.lce(2, 3) == 0);
  CHECK(index.lce(5, 5) == 4);
  CHECK_THROWS_AS((void)index.lce(0, 3), std::out_of_range);
  CHECK_THROWS_AS((void)index.lce(1, 9), std::out_of_range);
}

TEST_CASE("suffix tree and lowest common ancestors") {
  const TextIndex index(Text::from_bytes("banana"));
  const auto& st = index.suffix_tree();
  // root, leaves for 7 positions, internal a, ana, na
  CHECK(st.size() == 11);
  const NodeId x = index.lca().lca(st.leaf_of(2), st.leaf_of(4));
  CHECK(st.depth(x) == 3);
  CHECK(st.first(x) == 2);
  CHECK(st.last(x) == 4);
  CHECK(st.count(x) == 2);
  CHECK(index.lca().lca(st.leaf_of(1), st.leaf_of(3)) == st.root());
  CHECK_THROWS_AS((void)index.lca().lca(0, 99), std::out_of_range);
}

TEST_CASE("induced trees match the brute-force construction") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const Word w = random_word(rng, n, 1 + static_cast<int>(rng() % 3));
    const TextIndex index(to_text(w));
    const InducedTree root = induce_root_tree(index);
    REQUIRE(flatten(root) == oracle::naive_induced_tree(w, 1, n));

    const LcaIndex lca(root);
    std::vector<Interval> parts;
    for (int k = 0; k < 4; ++k) {
      const Pos a = 1 + static_cast<Pos>(rng() % n);
      const Pos b = a + static_cast<Pos>(rng() % (n - a + 1));
      parts.push_back({a, b});
    }
    ExtractStats stats;
    const auto trees = extract_subtrees(root, lca, parts, &stats);
    Pos total = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const auto expect = oracle::naive_induced_tree(w, parts[k].first, parts[k].last);
      REQUIRE(flatten(trees[k]) == expect);
      REQUIRE(flatten(induce_tree(index, parts[k])) == expect);
      total += parts[k].length();
      // origins point at the node of the parent tree spelling the same word
      for (NodeId v = 1; v < trees[k].size(); ++v) {
        const NodeId o = trees[k].origin(v);
        REQUIRE(o != kNoNode);
        CHECK(root.depth(o) == trees[k].depth(v));
        CHECK(root.is_ancestor(o, root.leaf_of(trees[k].first(v))));
      }
    }
    CHECK(stats.inserts == total);
  }
}

TEST_CASE("extraction rejects intervals outside the parent") {
  const TextIndex index(Text::from_bytes("abcabc"));
  const InducedTree root = induce_root_tree(index);
  const LcaIndex lca(root);
  const std::vector<Interval> bad{{2, 7}};
  CHECK_THROWS_AS(extract_subtrees(root, lca, bad), std::invalid_argument);
  const std::vector<Interval> empty{{3, 2}};
  CHECK_THROWS_AS(extract_subtrees(root, lca, empty), std::invalid_argument);
}

TEST_CASE("root tree from the suffix array equals the induced root tree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = to_text(random_word(rng, 1 + static_cast<int>(rng() % 200), 1 + static_cast<int>(rng() % 4)));
    const TextIndex index(t);
    const InducedTree a = induce_root_tree(index);
    const InducedTree b = build_root_tree(t, index.suffix_array());
    REQUIRE(a.size() == b.size());
    CHECK(a.span() == b.span());
    for (NodeId v = 0; v < a.size(); ++v) {
      CHECK(a.parent(v) == b.parent(v));
      CHECK(a.depth(v) == b.depth(v));
      CHECK(a.leaf_pos(v) == b.leaf_pos(v));
      CHECK(a.subtree_end(v) == b.subtree_end(v));
      CHECK(a.first(v) == b.first(v));
      CHECK(a.last(v) == b.last(v));
      CHECK(a.count(v) == b.count(v));
      CHECK(a.begin_leaf(v) == b.begin_leaf(v));
    }
  }
}
