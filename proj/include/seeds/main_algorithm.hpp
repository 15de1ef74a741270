#pragma once

#include <cstdint>

#include "seeds/induced_tree.hpp"
#include "seeds/merge.hpp"
#include "seeds/quasigap.hpp"
#include "seeds/range_engine.hpp"
#include "seeds/staircase.hpp"

namespace seeds {

struct SolverConfig {
  Constants constants = Constants::release();
  TailPolicy tail = TailPolicy::KeepTail;
  /// Verify invariants at every recursion level and compare each level
  /// against brute force while it is at most self_check_limit long.
  /// Violations are counted in SolverStats, never thrown.
  bool self_check = false;
  Pos self_check_limit = 2048;
};

struct SolverStats {
  RangeStats range;
  PathStats merge;
  ExtractStats extract;
  std::int64_t calls = 0;
  std::int64_t brute_calls = 0;
  std::int64_t brute_positions = 0;
  std::int64_t fallbacks = 0;  // levels whose working intervals did not shrink
  std::int64_t max_depth = 0;
  std::int64_t working_length = 0;  // total length of working intervals
  std::int64_t check_failures = 0;
};

/// Quasigaps of every node of `tree` (any T(gamma)) by the recursive
/// scheme: brute force up to n0; otherwise large values from the ranges
/// [m, 2N/g] and [delta, N], small ones by recursing on the reduced
/// staircase and merging.
QuasigapMap all_quasigaps(const InducedTree& tree, const SolverConfig& config = {},
                          SolverStats* stats = nullptr);

}  // namespace seeds
