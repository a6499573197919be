#ifndef SYMISO_SPECTRAL_HPP
#define SYMISO_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "symiso/characters.hpp"
#include "symiso/class_set.hpp"

namespace symiso {

/// Laplacian eigenvalues of T_n, one per partition in table order.
struct EigenvalueTable {
  int n = 0;
  std::vector<std::int64_t> mu;
};

/// mu_alpha = C(n,2) - 1/2 sum_i [(alpha_i - i)(alpha_i - i + 1) - i(i - 1)].
/// The half always cancels; throws InvariantViolation otherwise.
std::int64_t laplacian_eigenvalue(const Partition &alpha);

EigenvalueTable eigenvalue_table(const PartitionTable &table);

/// mu_{(n-t,t)} = tn - t^2 + t, for 0 <= t <= n/2.
std::int64_t two_row_eigenvalue(int t, int n);

inline constexpr int kMaxEigenvectorCheckN = 9;

/// Checks C(n,2) chi(l) - sum_tau chi(type(sigma_l tau)) = mu chi(l) on one
/// representative sigma_l per class. Any class function may be passed,
/// so a perturbed character acts as a negative control.
bool verify_eigenvector(const PartitionTable &table, const ClassFunction &chi, std::int64_t mu);

/// The check above for the irreducible character chi_alpha and the
/// closed-form eigenvalue. n <= 9.
bool verify_eigenvector(const Partition &alpha);

/// Integer spectral weights W_alpha = sum_{sigma in A} chi_alpha(sigma);
/// the L^2 weight is the rational w_alpha = W_alpha / n!.
struct WeightVector {
  int n = 0;
  std::vector<BigInt> W;
  BigInt group_order = 1;

  Rational w(std::size_t alpha) const;
};

WeightVector weights(const ConjClassSet &set, const CharacterTable &chars);

/// |dA| = (sum_alpha mu_alpha W_alpha^2) / n!. Throws InvariantViolation
/// if the division is not exact.
BigInt spectral_boundary(const ConjClassSet &set, const CharacterTable &chars);
BigInt spectral_boundary(const WeightVector &w, const EigenvalueTable &mu);

/// |A|(n! - |A|)/(n-1)!, the bound from mu_2 = n.
Rational diaconis_lower_bound(const BigInt &size, int n);

} // namespace symiso

#endif // SYMISO_SPECTRAL_HPP
