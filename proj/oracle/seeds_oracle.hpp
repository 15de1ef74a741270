#pragma once

// Brute-force reference implementations. Everything here works on plain
// symbol vectors straight from the definitions and shares no code with the
// library's fast paths. Costs are cubic or worse; inputs longer than
// kMaxOracleLength are rejected.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace seeds::oracle {

using Word = std::vector<int>;

inline constexpr int kMaxOracleLength = 4096;
/// Quasigap of a class without quasiseeds.
inline constexpr int kInfinity = INT32_MAX;

Word word_of(const char* s);
Word slice(const Word& w, int pos, int len);  // 1-based pos

/// 1-based start positions of v in w.
std::vector<int> occurrences(const Word& v, const Word& w);

bool brute_is_cover(const Word& v, const Word& w);
/// v occurs in w and some superstring of w with overhang < |v| per side is
/// covered by v. Placements p in [2-|v|, n] agreeing with w on the overlap
/// are the candidate occurrences.
bool brute_is_seed(const Word& v, const Word& w);
/// w = xyz with |x|, |z| < |v| and v covering y.
bool brute_is_quasiseed(const Word& v, const Word& w);

/// Equivalence classes of subwords (equal occurrence-start sets), keyed by
/// the longest word of the class, mapped to the length of the shortest
/// quasiseed in the class or kInfinity.
std::map<Word, int> brute_quasigap_map(const Word& w);

/// All distinct seeds of w.
std::set<Word> brute_all_seeds(const Word& w);

int brute_maxgap(const std::vector<int>& sorted);

/// Size of a smallest family of occurrences of v covering w, or -1 when v is
/// not a cover.
int brute_minimal_cover_count(const Word& v, const Word& w);

/// LPnF over w[first..last]: per position p, longest prefix of w[p..last]
/// occurring entirely inside w[first..p-1].
std::vector<int> naive_lpnf(const Word& w, int first, int last);
/// Greedy f-factorization of w[first..last] as (start, length) pairs.
std::vector<std::pair<int, int>> naive_f_factorization(const Word& w, int first, int last);
/// Minimal number of factors over all factorizations of w (each factor a
/// single letter or a subword of the concatenation of earlier factors).
int exhaustive_min_factor_count(const Word& w);

/// Explicit node of an induced suffix tree built by brute force.
struct NaiveNode {
  int depth = 0;        // string depth; leaves count the end marker
  int word_length = 0;  // without the end marker
  int parent_depth = -1;
  std::vector<int> leaves;  // sorted positions in the subtree
  friend bool operator==(const NaiveNode&, const NaiveNode&) = default;
};

/// T([first..last]) by brute force: the root, one leaf per position and one
/// node per distinct longest common prefix of two member suffixes. Sorted by
/// (depth, first leaf).
std::vector<NaiveNode> naive_induced_tree(const Word& w, int first, int last);

/// quasigap(v, [first..last]) for every explicit node of the naive tree,
/// evaluated from the definition over its occurrence list; kInfinity when
/// the formula exceeds the node's length. Keyed by (depth, first leaf).
std::map<std::pair<int, int>, int> naive_interval_quasigaps(const Word& w, int first, int last);

/// Tree-Path-Problem by walking every path. `parent[root] == -1`. Paths are
/// (v, u, weight) with u a proper ancestor of v; the path covers v up to but
/// excluding u. Uncovered nodes get INT64_MIN for max and 0 for sum.
struct PathSpec {
  int v;
  int u;
  std::int64_t weight;
};
std::vector<std::int64_t> naive_tree_path_max(const std::vector<int>& parent,
                                              const std::vector<PathSpec>& paths);
std::vector<std::int64_t> naive_tree_path_sum(const std::vector<int>& parent,
                                              const std::vector<PathSpec>& paths);

}  // namespace seeds::oracle
