#ifndef SYMISO_CHARACTERS_HPP
#define SYMISO_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "symiso/exact.hpp"
#include "symiso/partition.hpp"
#include "symiso/permutation.hpp"

namespace symiso {

/// An exact integer-valued class function on S_n: one value per conjugacy
/// class, indexed by PartitionTable(n) position.
class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(int n, std::vector<BigInt> values) : n_(n), values_(std::move(values)) {}

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const BigInt &operator[](std::size_t i) const { return values_[i]; }
  BigInt &operator[](std::size_t i) { return values_[i]; }
  const std::vector<BigInt> &values() const noexcept { return values_; }

  friend bool operator==(const ClassFunction &, const ClassFunction &) = default;

private:
  int n_ = 0;
  std::vector<BigInt> values_;
};

/// chi_alpha = sum_beta c_{alpha beta} xi_beta, every beta dominating alpha.
struct DeterminantalExpansion {
  Partition alpha;
  std::map<Partition, std::int64_t> terms;

  /// sum_beta |c_{alpha beta}|
  std::int64_t abs_coefficient_sum() const;
};

/// xi_beta(sigma) for sigma of cycle type lambda: the number of
/// beta-tabloids fixed by sigma, i.e. the number of ways to distribute the
/// cycles of lambda into rows of sizes beta_1, ..., beta_l.
BigInt xi_on_class(const Partition &beta, const Partition &lambda);

/// xi_{(n-s,s)}(lambda): number of s-subsets of [n] that are unions of
/// cycles of lambda. s is normalized to min(s, n-s).
BigInt xi_two_row(int s, const Partition &lambda);

inline constexpr int kMaxDeterminantalU = 6;

/// Expansion of chi_alpha through the determinantal formula, iterating
/// only over S_{u+1} with u = n - alpha_1 <= 6.
DeterminantalExpansion determinantal_expansion(const Partition &alpha);

/// sum_beta c_{alpha beta} xi_beta(lambda).
BigInt chi_via_determinantal(const Partition &alpha, const Partition &lambda);

inline constexpr int kMaxCharacterTableN = 14;

/// Full irreducible character table of S_n computed by the
/// Murnaghan-Nakayama rule. Row alpha and column lambda both follow
/// PartitionTable order. n <= 14.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const noexcept { return partitions_.n(); }
  const PartitionTable &partitions() const noexcept { return partitions_; }
  std::size_t size() const noexcept { return rows_.size(); }

  const ClassFunction &row(std::size_t alpha) const { return rows_[alpha]; }
  const BigInt &value(std::size_t alpha, std::size_t lambda) const { return rows_[alpha][lambda]; }
  const BigInt &class_size(std::size_t lambda) const { return class_sizes_[lambda]; }
  const std::vector<BigInt> &class_sizes() const noexcept { return class_sizes_; }
  const BigInt &group_order() const noexcept { return order_; }

private:
  PartitionTable partitions_;
  std::vector<BigInt> class_sizes_;
  std::vector<ClassFunction> rows_;
  BigInt order_;
};

CharacterTable character_table(int n);

/// chi_alpha(lambda) by a single Murnaghan-Nakayama evaluation.
std::int64_t murnaghan_nakayama(const Partition &alpha, const Partition &lambda);

/// Counts beta-tabloids fixed by sigma by enumerating every ordered set
/// partition of [n] with block sizes beta. Oracle for xi_on_class; needs
/// n <= 7 and at most 10^6 tabloids.
BigInt xi_bruteforce(const Partition &beta, const PermWord &sigma);

} // namespace symiso

#endif // SYMISO_CHARACTERS_HPP
