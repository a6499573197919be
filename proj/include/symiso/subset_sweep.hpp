#ifndef SYMISO_SUBSET_SWEEP_HPP
#define SYMISO_SUBSET_SWEEP_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "symiso/class_set.hpp"

namespace symiso {

/// One visited union of conjugacy classes.
struct SweepState {
  std::uint64_t mask = 0;
  std::int64_t size = 0;
  std::int64_t boundary = 0;
};

/// a precedes b when, at the first class position where they differ, a
/// leaves the class out.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) noexcept
{
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) == 0;
}

inline constexpr std::size_t kMaxSweepClasses = 30;

/// Exhaustive enumeration of all 2^{p(n)} class unions in Gray-code order.
/// Each step flips one class and updates size and boundary in O(p(n))
/// from the interaction matrix.
class ClassSubsetSweep {
public:
  ClassSubsetSweep(const InteractionMatrix &matrix, std::span<const std::int64_t> class_sizes);

  std::size_t class_count() const noexcept { return p_; }

  /// Number of shards used for `workers` threads: a power of two, at most
  /// 2^{p(n)}.
  std::size_t shard_count(unsigned workers) const;

  /// Visits every subset whose top `shard_bits` class bits equal `shard`.
  template <class Visit>
  void run_shard(unsigned shard_bits, std::uint64_t shard, Visit &&visit) const;

  /// Runs every shard, spreading them over `workers` threads. Returns one
  /// partial result per shard in shard order, so merging is deterministic.
  template <class Partial, class Visit>
  std::vector<Partial> run(unsigned workers, const Partial &init, Visit visit) const;

private:
  std::size_t p_;
  std::vector<std::int64_t> e_;
  std::vector<std::int64_t> external_;
  std::vector<std::int64_t> sizes_;
};

template <class Visit>
void ClassSubsetSweep::run_shard(unsigned shard_bits, std::uint64_t shard, Visit &&visit) const
{
  const std::size_t low_bits = p_ - shard_bits;
  SweepState state;
  state.mask = shard << low_bits;

  // inner[c] = edges from c into the current set, excluding c itself
  std::vector<std::int64_t> inner(p_, 0);
  for (std::size_t c = 0; c < p_; ++c) {
    if (!((state.mask >> c) & 1u))
      continue;
    state.size += sizes_[c];
    for (std::size_t m = 0; m < p_; ++m)
      if (m != c)
        inner[m] += e_[m * p_ + c];
  }
  for (std::size_t c = 0; c < p_; ++c)
    if ((state.mask >> c) & 1u)
      state.boundary += external_[c] - inner[c];

  visit(static_cast<const SweepState &>(state));
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto c = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << c;
    const std::int64_t delta = external_[c] - 2 * inner[c];
    if (state.mask & bit) {
      state.mask &= ~bit;
      state.size -= sizes_[c];
      state.boundary -= delta;
      for (std::size_t m = 0; m < p_; ++m)
        if (m != c)
          inner[m] -= e_[m * p_ + c];
    } else {
      state.mask |= bit;
      state.size += sizes_[c];
      state.boundary += delta;
      for (std::size_t m = 0; m < p_; ++m)
        if (m != c)
          inner[m] += e_[m * p_ + c];
    }
    visit(static_cast<const SweepState &>(state));
  }
}

template <class Partial, class Visit>
std::vector<Partial> ClassSubsetSweep::run(unsigned workers, const Partial &init, Visit visit) const
{
  workers = std::max(1u, workers);
  const std::size_t shards = shard_count(workers);
  const auto shard_bits = static_cast<unsigned>(std::countr_zero(shards));
  std::vector<Partial> partials(shards, init);
  auto work = [&](unsigned worker) {
    for (std::size_t s = worker; s < shards; s += workers)
      run_shard(shard_bits, s, [&](const SweepState &st) { visit(partials[s], st); });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }
  return partials;
}

} // namespace symiso

#endif // SYMISO_SUBSET_SWEEP_HPP
