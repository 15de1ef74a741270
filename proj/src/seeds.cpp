#include "seeds/seeds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "seeds/induced_tree.hpp"
#include "seeds/predicates.hpp"

namespace seeds {

std::vector<CandidateSet> candidate_sets(const InducedTree& tree, const QuasigapMap& gaps) {
  if (static_cast<NodeId>(gaps.size()) != tree.size()) {
    throw std::invalid_argument("candidate_sets: quasigap map does not match tree");
  }
  std::vector<CandidateSet> out;
  for (NodeId v = 1; v < tree.size(); ++v) {
    const Pos q = gaps[v];
    if (!is_finite(q) || q > tree.word_length(v)) continue;
    out.push_back({v, tree.first(v), q, tree.word_length(v)});
  }
  return out;
}

BorderFilter::BorderFilter(const Text& text) : n_(text.size()) {
  const auto sym = text.symbols();
  auto z = z_function(sym);
  z_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (Pos p = 1; p <= n_; ++p) z_[p] = z[p - 1];
  z_reach_.resize(z_.size());
  for (Pos p = 0; p <= n_ + 1; ++p) z_reach_[p] = z_[p] + p;

  std::vector<Symbol> rev(sym.rbegin(), sym.rend());
  const auto zr = z_function(rev);
  tail_key_.assign(static_cast<std::size_t>(n_) + 1, std::numeric_limits<Pos>::min());
  for (Pos r = 1; r <= n_; ++r) tail_key_[r] = zr[n_ - r] - r;

  z_max_ = RangeMax<Pos>(z_);
  reach_max_ = RangeMax<Pos>(z_reach_);
  tail_max_ = RangeMax<Pos>(tail_key_);

  right_min_.assign(static_cast<std::size_t>(n_) + 1, 0);
  Pos len = n_;
  for (Pos ik = 1; ik <= n_; ++ik) {
    while (len > 1 && right_ok(ik, len - 1)) --len;
    right_min_[ik] = len;
  }
}

std::int64_t BorderFilter::reach(Pos a, Pos b) const {
  return reach_max_.value(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

Pos BorderFilter::next_at_least(Pos a, Pos b, Pos t) const {
  b = std::min(b, n_ + 1);
  if (a > b || z_max_.value(a, b) < t) return 0;
  Pos lo = a;
  Pos hi = b;
  while (lo < hi) {
    const Pos mid = lo + (hi - lo) / 2;
    if (z_max_.value(a, mid) >= t) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

bool BorderFilter::left_ok(Pos i1, Pos len) const {
  if (i1 == 1) return true;
  if (i1 > len) return false;
  return reach(i1 + 1, len + 1) >= static_cast<std::int64_t>(i1) + len;
}

bool BorderFilter::right_ok(Pos ik, Pos len) const {
  if (ik + len - 1 >= n_) return true;
  const Pos a = std::max<Pos>(1, n_ - len);
  const Pos b = ik + len - 2;
  if (a > b) return false;
  return tail_max_.value(a, b) >= 1 - ik;
}

Pos BorderFilter::right_from(Pos ik, Pos lo, Pos hi) const {
  const Pos from = std::max(lo, right_min_[ik]);
  return from <= hi ? from : hi + 1;
}

void BorderFilter::left_runs(Pos i1, Pos lo, Pos hi,
                             const std::function<void(Pos, Pos)>& emit) const {
  if (lo > hi) return;
  if (i1 == 1) {
    emit(lo, hi);
    return;
  }
  lo = std::max(lo, i1);  // no overhang can reach past the first occurrence
  auto extent = [&](Pos len) { return reach(i1 + 1, len + 1) - i1; };
  Pos len = lo;
  while (len <= hi) {
    std::int64_t e = extent(len);
    if (e >= len) {
      const Pos start = len;
      while (e >= len && len <= hi) {
        len = static_cast<Pos>(std::min<std::int64_t>(e, hi)) + 1;
        if (len <= hi) e = extent(len);
      }
      emit(start, len - 1);
      continue;
    }
    // Invalid here; the next valid length needs a new start s with
    // z[s] >= i1 - 1, and then s - 1 is valid.
    const Pos s = next_at_least(len + 2, hi + 1, i1 - 1);
    if (s == 0) return;
    len = s - 1;
  }
}

SeedSet::SeedSet(std::vector<SeedRange> ranges) : ranges_(std::move(ranges)) {
  for (const auto& r : ranges_) count_ += r.hi - r.lo + 1;
}

std::pair<Pos, Pos> SeedSet::shortest() const {
  if (ranges_.empty()) throw std::logic_error("SeedSet::shortest on an empty set");
  std::pair<Pos, Pos> best{0, std::numeric_limits<Pos>::max()};
  for (const auto& r : ranges_) {
    if (r.lo < best.second || (r.lo == best.second && r.pos < best.first)) best = {r.pos, r.lo};
  }
  return best;
}

std::vector<std::pair<Pos, Pos>> SeedSet::all_shortest() const {
  std::vector<std::pair<Pos, Pos>> out;
  if (ranges_.empty()) return out;
  const Pos len = shortest().second;
  for (const auto& r : ranges_) {
    if (r.lo == len) out.emplace_back(r.pos, len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SeedSet::enumerate(const std::function<bool(Pos, Pos)>& visit) const {
  for (const auto& r : ranges_) {
    for (Pos len = r.lo; len <= r.hi; ++len) {
      if (!visit(r.pos, len)) return;
    }
  }
}

SeedSet filter_seeds(const InducedTree& tree, const std::vector<CandidateSet>& candidates,
                     const BorderFilter& filter) {
  std::vector<SeedRange> out;
  for (const auto& c : candidates) {
    const Pos last = tree.last(c.node);
    const Pos lo = filter.right_from(last, c.lo, c.hi);
    filter.left_runs(c.pos, lo, c.hi,
                     [&](Pos a, Pos b) { out.push_back({c.node, c.pos, a, b}); });
  }
  return SeedSet(std::move(out));
}

namespace {

InducedTree root_tree_of(const Text& text) {
  const SuffixArray sa = build_suffix_array(text);
  return build_root_tree(text, sa);
}

}  // namespace

Analysis::Analysis(Text text, SolverConfig config)
    : text_(std::move(text)),
      tree_(root_tree_of(text_)),
      gaps_(all_quasigaps(tree_, config, &stats_)) {}

std::vector<CandidateSet> Analysis::candidate_sets() const {
  return seeds::candidate_sets(tree_, gaps_);
}

SeedSet Analysis::all_seeds() const {
  const BorderFilter filter(text());
  return filter_seeds(tree_, candidate_sets(), filter);
}

std::pair<Pos, Pos> Analysis::shortest_seed() const { return all_seeds().shortest(); }

}  // namespace seeds
