#include "seeds/main_algorithm.hpp"

#include <algorithm>

#include "seeds/factorization.hpp"

namespace seeds {
namespace {

class Recursion {
 public:
  Recursion(const SolverConfig& config, SolverStats& stats) : config_(config), stats_(stats) {}

  QuasigapMap run(const InducedTree& t, std::int64_t depth) {
    ++stats_.calls;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const Interval gamma = t.span();
    const Pos n = gamma.length();
    const Constants& c = config_.constants;
    if (n <= c.n0) return brute(t);

    const Factorization f = f_factorize(t);
    const Pos delta = c.delta(n);
    const Pos g = middle_factor_count(f, gamma, delta);
    const Pos m = c.step(n, g);

    QuasigapMap out(static_cast<std::size_t>(t.size()), kInfiniteGap);
    auto take = [&](const std::vector<RestrictedValue>& vals) {
      for (NodeId v = 0; v < t.size(); ++v) {
        if (vals[v].verdict != Verdict::Exact) continue;
        if (is_finite(out[v]) && out[v] != vals[v].value) ++stats_.check_failures;
        out[v] = vals[v].value;
      }
    };

    if (g == 0) {
      take(compute_in_range(t, 1, n, &stats_.range));
    } else {
      const auto hi = static_cast<Pos>((2 * std::int64_t{n} + g - 1) / g);
      take(compute_in_range(t, std::max<Pos>(1, m), std::max<Pos>(hi, std::max<Pos>(1, m)),
                            &stats_.range));
      take(compute_in_range(t, std::max<Pos>(1, delta), n, &stats_.range));
    }
    // Above N only the parent term can be large.
    for (NodeId v = 1; v < t.size(); ++v) {
      const std::int64_t above = std::int64_t{t.word_length(t.parent(v))} + 1;
      if (above > n) out[v] = above <= t.word_length(v) ? static_cast<Pos>(above) : kInfiniteGap;
    }

    std::int64_t working = 0;
    if (m >= 1) {
      const auto stairs = build_staircase(gamma, m);
      const auto parts = reduce_staircase(stairs, f, m, gamma, config_.tail);
      working = total_length(parts);
      stats_.working_length += working;
      const bool shrinks = std::all_of(parts.begin(), parts.end(),
                                       [&](const Interval& l) { return l.length() < n; });
      if (!shrinks || parts.empty()) {
        ++stats_.fallbacks;
        return brute(t);
      }
      const LcaIndex lca(t);
      const auto kids = extract_subtrees(t, lca, parts, &stats_.extract);
      std::vector<QuasigapMap> gaps;
      gaps.reserve(kids.size());
      for (const auto& kid : kids) gaps.push_back(run(kid, depth + 1));
      take(merge_small_quasigaps(t, kids, gaps, m, &stats_.merge));
    }

    if (config_.self_check) check(t, out, g, m, delta, working);
    return out;
  }

 private:
  QuasigapMap brute(const InducedTree& t) {
    ++stats_.brute_calls;
    stats_.brute_positions += t.span().length();
    return brute_quasigaps(t);
  }

  void check(const InducedTree& t, const QuasigapMap& out, Pos g, Pos m, Pos delta,
             std::int64_t working) {
    const Pos n = t.span().length();
    if (config_.constants == Constants::release()) {
      if (g < 3) ++stats_.check_failures;
      if (m > 0 && 2 * working >= n) ++stats_.check_failures;
    }
    if (n > config_.self_check_limit) return;
    const QuasigapMap expect = brute_quasigaps(t);
    for (NodeId v = 0; v < t.size(); ++v) {
      if (out[v] != expect[v]) ++stats_.check_failures;
      // no quasigap between 2N/g and delta
      if (g > 0 && is_finite(expect[v]) && std::int64_t{expect[v]} * g > 2 * std::int64_t{n} &&
          expect[v] <= delta) {
        ++stats_.check_failures;
      }
    }
  }

  const SolverConfig& config_;
  SolverStats& stats_;
};

}  // namespace

QuasigapMap all_quasigaps(const InducedTree& tree, const SolverConfig& config,
                          SolverStats* stats) {
  SolverStats local;
  Recursion r(config, stats != nullptr ? *stats : local);
  return r.run(tree, 0);
}

}  // namespace seeds
