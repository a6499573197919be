#ifndef SYMISO_OPTIMIZER_HPP
#define SYMISO_OPTIMIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "symiso/class_set.hpp"

namespace symiso {

inline constexpr int kMaxOptimizerN = 8;
inline constexpr int kMaxBenEfraimN = 4;

/// Xi_n(k): least edge-boundary over conjugation-invariant sets of size k.
/// Unachievable k (no union of classes has that size) is a regular result
/// with no witness. Among minimizers the witness is the lexicographically
/// least membership bitset.
struct XiResult {
  int n = 0;
  std::int64_t k = 0;
  bool achievable = false;
  std::int64_t min_boundary = 0;
  std::optional<ConjClassSet> witness;
};

/// Exhaustive Gray-code sweep over all class unions. n <= 8, 0 <= k <= n!.
XiResult xi_min(int n, std::int64_t k, unsigned workers = 1);

/// Xi_n(k) for every achievable k, ascending in k.
std::vector<XiResult> xi_profile(int n, unsigned workers = 1);

/// One achievable k checked against min{|dA_{s-1}|, |dA_s|} for every s
/// with |A_s| <= k <= |A_{s-1}|.
struct ConjectureEntry {
  std::int64_t k = 0;
  std::int64_t xi = 0;
  std::uint64_t witness_mask = 0;
  std::vector<int> candidate_s;
  std::vector<std::int64_t> conjectured_bound;
  bool ambiguous = false;
  bool holds_every_reading = false;
  bool holds_some_reading = false;
  /// Xi_n(k) >= |A|(n! - |A|)/(n-1)!, a proved floor.
  bool diaconis_floor_holds = false;
};

struct ConclusionReport {
  int n = 0;
  /// |A_s| and |dA_s| for s = 0, ..., n.
  std::vector<std::int64_t> a_sizes;
  std::vector<std::int64_t> a_boundaries;
  std::vector<ConjectureEntry> entries;
  std::vector<std::int64_t> unachievable;
  std::size_t violations_every_reading = 0;
  std::size_t violations_some_reading = 0;
  bool diaconis_floor_holds = true;
};

/// Evaluates the conjectured lower bound on Xi_n(k) for all achievable
/// k in [1, n!]. Reports, never asserts. n <= 8.
ConclusionReport conclusion_conjecture_check(int n, unsigned workers = 1);

/// Minimum boundary over all 2^{n!} subsets of S_n, per size, against the
/// lexicographic initial segment of the same size.
struct BenEfraimReport {
  int n = 0;
  std::uint64_t subsets = 0;
  std::vector<std::int64_t> min_profile;
  std::vector<std::int64_t> lex_profile;
  std::vector<std::int64_t> violations;
  bool conjecture_holds = false;
  /// min_profile[c (n-1)!] = c (n! - c (n-1)!) for c = 0, ..., n.
  bool diaconis_equalities_hold = false;
};

/// Gray-code sweep over vertex subsets with O(1) bitmask boundary deltas.
/// n <= 4.
BenEfraimReport ben_efraim_check(int n);

} // namespace symiso

#endif // SYMISO_OPTIMIZER_HPP
