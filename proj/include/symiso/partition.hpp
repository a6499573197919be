#ifndef SYMISO_PARTITION_HPP
#define SYMISO_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symiso/exact.hpp"

namespace symiso {

/// A partition of n: a non-increasing sequence of positive parts. Doubles
/// as a cycle type, i.e. the index of a conjugacy class of S_n. The empty
/// sequence is the unique partition of 0.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts, drops zero entries; throws on negative entries.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "3+2+2" (whitespace ignored). "0" or "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int> &parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// 0-based part access, zero past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int first() const noexcept { return part(0); }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  /// m[i] = multiplicity of part i, for i in [0, n].
  std::vector<int> multiplicities() const;

  /// "3+1+1"; the empty partition prints as "0".
  std::string to_string() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
  {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in descending lexicographic order: (n) first,
/// (1,...,1) last. Immutable once built.
class PartitionTable {
public:
  explicit PartitionTable(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return list_.size(); }
  const Partition &operator[](std::size_t i) const { return list_[i]; }
  const std::vector<Partition> &list() const noexcept { return list_; }

  auto begin() const noexcept { return list_.begin(); }
  auto end() const noexcept { return list_.end(); }

  /// Throws std::invalid_argument if `p` is not a partition of n().
  std::size_t index_of(const Partition &p) const;

private:
  int n_;
  std::vector<Partition> list_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline constexpr int kMaxPartitionN = 40;

/// Throws std::out_of_range unless 0 <= n <= 40.
PartitionTable partitions_of(int n);

/// beta ⊵ alpha: every prefix sum of beta is at least that of alpha.
/// Reflexive. Throws std::invalid_argument on mismatched n.
bool dominates(const Partition &beta, const Partition &alpha);

/// Size of the conjugacy class of S_n with cycle type lambda:
/// n! / prod_i (i^{m_i} m_i!).
BigInt class_size(const Partition &lambda);

} // namespace symiso

#endif // SYMISO_PARTITION_HPP
