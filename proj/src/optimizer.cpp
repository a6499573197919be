#include "symiso/optimizer.hpp"

#include <bit>
#include <limits>
#include <string>

#include "symiso/boundaries.hpp"
#include "symiso/permutation.hpp"
#include "symiso/subset_sweep.hpp"

namespace symiso {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

void require_optimizer_n(int n)
{
  if (n < 1 || n > kMaxOptimizerN)
    throw std::out_of_range("optimizer: n must lie in [1, 8], got " + std::to_string(n));
}

struct ClassSweepSetup {
  PartitionTable table;
  InteractionMatrix matrix;
  std::vector<std::int64_t> sizes;

  explicit ClassSweepSetup(int n) : table(n), matrix(interaction_matrix(table))
  {
    for (const auto &lambda : table)
      sizes.push_back(to_int64(class_size(lambda)));
  }
};

struct Best {
  std::int64_t boundary = kUnset;
  std::uint64_t mask = 0;

  void offer(std::int64_t b, std::uint64_t m)
  {
    if (b < boundary || (b == boundary && mask_lex_less(m, mask))) {
      boundary = b;
      mask = m;
    }
  }
};

std::vector<Best> best_per_size(const ClassSweepSetup &setup, unsigned workers)
{
  const ClassSubsetSweep sweep(setup.matrix, setup.sizes);
  const auto order = static_cast<std::size_t>(factorial_u64(setup.table.n()));
  auto partials = sweep.run(workers, std::vector<Best>(order + 1), [](std::vector<Best> &acc, const SweepState &st) {
    acc[static_cast<std::size_t>(st.size)].offer(st.boundary, st.mask);
  });
  std::vector<Best> merged(order + 1);
  for (const auto &part : partials)
    for (std::size_t k = 0; k <= order; ++k)
      if (part[k].boundary != kUnset)
        merged[k].offer(part[k].boundary, part[k].mask);
  return merged;
}

XiResult to_result(const ClassSweepSetup &setup, std::int64_t k, const Best &best)
{
  XiResult r;
  r.n = setup.table.n();
  r.k = k;
  r.achievable = best.boundary != kUnset;
  if (r.achievable) {
    r.min_boundary = best.boundary;
    r.witness = ConjClassSet::from_mask(setup.table, best.mask);
  }
  return r;
}

} // namespace

XiResult xi_min(int n, std::int64_t k, unsigned workers)
{
  require_optimizer_n(n);
  const auto order = static_cast<std::int64_t>(factorial_u64(n));
  if (k < 0 || k > order)
    throw std::out_of_range("xi_min: need 0 <= k <= n!");
  const ClassSweepSetup setup(n);
  const ClassSubsetSweep sweep(setup.matrix, setup.sizes);
  auto partials = sweep.run(workers, Best{}, [k](Best &acc, const SweepState &st) {
    if (st.size == k)
      acc.offer(st.boundary, st.mask);
  });
  Best best;
  for (const auto &part : partials)
    if (part.boundary != kUnset)
      best.offer(part.boundary, part.mask);
  return to_result(setup, k, best);
}

std::vector<XiResult> xi_profile(int n, unsigned workers)
{
  require_optimizer_n(n);
  const ClassSweepSetup setup(n);
  const auto best = best_per_size(setup, workers);
  std::vector<XiResult> out;
  for (std::size_t k = 0; k < best.size(); ++k)
    if (best[k].boundary != kUnset)
      out.push_back(to_result(setup, static_cast<std::int64_t>(k), best[k]));
  return out;
}

ConclusionReport conclusion_conjecture_check(int n, unsigned workers)
{
  require_optimizer_n(n);
  const ClassSweepSetup setup(n);
  const auto best = best_per_size(setup, workers);
  const auto order = static_cast<std::int64_t>(factorial_u64(n));
  const auto prev_order = static_cast<std::int64_t>(factorial_u64(n - 1));

  ConclusionReport report;
  report.n = n;
  for (int s = 0; s <= n; ++s) {
    const auto a_s = make_A_s(setup.table, s);
    report.a_sizes.push_back(to_int64(a_s.size()));
    report.a_boundaries.push_back(to_int64(boundary_via_classes(a_s, setup.matrix)));
  }

  for (std::int64_t k = 1; k <= order; ++k) {
    const auto &b = best[static_cast<std::size_t>(k)];
    if (b.boundary == kUnset) {
      report.unachievable.push_back(k);
      continue;
    }
    ConjectureEntry e;
    e.k = k;
    e.xi = b.boundary;
    e.witness_mask = b.mask;
    e.holds_every_reading = true;
    for (int s = 1; s <= n; ++s) {
      const auto si = static_cast<std::size_t>(s);
      if (report.a_sizes[si] <= k && k <= report.a_sizes[si - 1]) {
        const std::int64_t bound = std::min(report.a_boundaries[si - 1], report.a_boundaries[si]);
        e.candidate_s.push_back(s);
        e.conjectured_bound.push_back(bound);
        e.holds_every_reading &= e.xi >= bound;
        e.holds_some_reading |= e.xi >= bound;
      }
    }
    e.ambiguous = e.candidate_s.size() > 1;
    e.diaconis_floor_holds = e.xi * prev_order >= k * (order - k);
    report.violations_every_reading += !e.holds_some_reading;
    report.violations_some_reading += !e.holds_every_reading;
    report.diaconis_floor_holds &= e.diaconis_floor_holds;
    report.entries.push_back(std::move(e));
  }
  return report;
}

BenEfraimReport ben_efraim_check(int n)
{
  if (n < 1 || n > kMaxBenEfraimN)
    throw std::out_of_range("ben_efraim_check: n must lie in [1, 4], got " + std::to_string(n));
  const auto &graph = TranspositionGraph::of(n);
  const std::uint32_t vertices = graph.vertex_count();
  std::vector<std::uint32_t> adjacency(vertices, 0);
  for (std::uint32_t v = 0; v < vertices; ++v)
    for (auto w : graph.neighbours(v))
      adjacency[v] |= std::uint32_t{1} << w;

  BenEfraimReport report;
  report.n = n;
  report.min_profile.assign(vertices + 1, kUnset);
  report.min_profile[0] = 0;
  std::uint32_t mask = 0;
  std::int64_t size = 0, boundary = 0;
  const std::int64_t degree = graph.degree();
  const std::uint64_t steps = std::uint64_t{1} << vertices;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::int64_t inside = std::popcount(adjacency[v] & mask);
    if (mask & bit) {
      mask &= ~bit;
      --size;
      boundary -= degree - 2 * inside;
    } else {
      mask |= bit;
      ++size;
      boundary += degree - 2 * inside;
    }
    auto &slot = report.min_profile[static_cast<std::size_t>(size)];
    slot = std::min(slot, boundary);
  }
  report.subsets = steps;

  report.lex_profile = lex_segment_profile(n);
  report.conjecture_holds = true;
  for (std::size_t k = 0; k <= vertices; ++k)
    if (report.min_profile[k] < report.lex_profile[k]) {
      report.conjecture_holds = false;
      report.violations.push_back(static_cast<std::int64_t>(k));
    }

  const auto order = static_cast<std::int64_t>(vertices);
  const auto prev_order = static_cast<std::int64_t>(factorial_u64(n - 1));
  report.diaconis_equalities_hold = true;
  for (std::int64_t c = 0; c <= n; ++c) {
    const std::int64_t k = c * prev_order;
    report.diaconis_equalities_hold &= report.min_profile[static_cast<std::size_t>(k)] == c * (order - k);
  }
  return report;
}

} // namespace symiso
