#ifndef SYMISO_COUNTING_HPP
#define SYMISO_COUNTING_HPP

#include "symiso/exact.hpp"

namespace symiso {

/// d_m = m! * sum_{i=0}^{m} (-1)^i / i!, the number of fixed-point-free
/// permutations of [m].
BigInt derangement_count(int m);

/// |D_{n,i,j}|: permutations of [n] with exactly j cycles of length i,
/// via Goncharov's alternating sum evaluated over exact rationals.
/// Requires 1 <= i <= n and 0 <= j <= floor(n/i). Throws
/// InvariantViolation if the sum is not a non-negative integer.
BigInt cycle_count_census(int n, int i, int j);

} // namespace symiso

#endif // SYMISO_COUNTING_HPP
