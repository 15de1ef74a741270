#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "seeds/text.hpp"
#include "seeds/quasigap.hpp"
#include "seeds/tree.hpp"
#include "seeds_oracle.hpp"

namespace seeds::testing {

using oracle::Word;

inline Text to_text(const Word& w) { return Text(std::vector<Symbol>(w.begin(), w.end())); }
inline Word from_string(const std::string& s) { return oracle::word_of(s.c_str()); }

/// Every word over {'a', 'a'+1, ...} of length exactly `len`.
inline std::vector<Word> all_words(int sigma, int len) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(len), 'a');
  while (true) {
    out.push_back(w);
    int k = len - 1;
    while (k >= 0 && w[k] == 'a' + sigma - 1) w[k--] = 'a';
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int len, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  Word w(static_cast<std::size_t>(len));
  for (auto& c : w) c = 'a' + pick(rng);
  return w;
}

/// An InducedTree flattened into the oracle's node format.
inline std::vector<oracle::NaiveNode> flatten(const InducedTree& t) {
  std::vector<oracle::NaiveNode> out;
  for (NodeId v = 0; v < t.size(); ++v) {
    oracle::NaiveNode node;
    node.depth = t.depth(v);
    node.word_length = t.word_length(v);
    node.parent_depth = t.parent(v) == kNoNode ? -1 : t.depth(t.parent(v));
    for (Pos r = t.begin_leaf(v); r < t.end_leaf(v); ++r) {
      node.leaves.push_back(t.leaf_pos(t.leaves()[r]));
    }
    std::sort(node.leaves.begin(), node.leaves.end());
    out.push_back(std::move(node));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.depth, a.leaves.front()) < std::pair(b.depth, b.leaves.front());
  });
  return out;
}

/// Quasigaps of a tree over [1..n] keyed by node word, as the class oracle
/// reports them. Nodes spelling no new word (the root, leaves hanging off by
/// the end marker alone) are skipped.
inline std::map<Word, int> by_word(const Word& w, const InducedTree& t, const QuasigapMap& q) {
  std::map<Word, int> out;
  for (NodeId v = 1; v < t.size(); ++v) {
    if (t.word_length(v) == t.word_length(t.parent(v))) continue;
    out.emplace(oracle::slice(w, t.rep(v), t.word_length(v)), q[v]);
  }
  return out;
}

/// Quasigaps keyed by (depth, first leaf), the interval oracle's format.
inline std::map<std::pair<int, int>, int> by_depth(const InducedTree& t, const QuasigapMap& q) {
  std::map<std::pair<int, int>, int> out;
  for (NodeId v = 0; v < t.size(); ++v) out[{t.depth(v), t.first(v)}] = q[v];
  return out;
}

}  // namespace seeds::testing
