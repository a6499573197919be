#ifndef SYMISO_CLASS_SET_HPP
#define SYMISO_CLASS_SET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symiso/exact.hpp"
#include "symiso/partition.hpp"

namespace symiso {

/// A conjugation-invariant subset of S_n, stored as a membership bitset
/// over the PartitionTable(n) positions with its cached cardinality.
class ConjClassSet {
public:
  ConjClassSet() = default;
  ConjClassSet(const PartitionTable &table, std::vector<bool> members);

  static ConjClassSet none(const PartitionTable &table);
  static ConjClassSet all(const PartitionTable &table);
  static ConjClassSet from_classes(const PartitionTable &table, std::span<const Partition> classes);

  /// Bit i of `mask` selects class i. Requires p(n) <= 64.
  static ConjClassSet from_mask(const PartitionTable &table, std::uint64_t mask);

  /// Parses "2+1+1, 3+1" (classes joined by ',', parts by '+').
  static ConjClassSet parse(const PartitionTable &table, std::string_view text);

  int n() const noexcept { return n_; }
  std::size_t class_count() const noexcept { return members_.size(); }
  bool contains(std::size_t cls) const { return members_[cls]; }
  const std::vector<bool> &members() const noexcept { return members_; }

  /// Number of permutations in the set.
  const BigInt &size() const noexcept { return size_; }

  ConjClassSet complement() const;
  std::vector<std::size_t> member_indices() const;
  std::uint64_t mask() const;

  /// Member cycle types in table order, e.g. {"3+1", "2+2"}.
  std::vector<std::string> to_strings(const PartitionTable &table) const;

  friend bool operator==(const ConjClassSet &a, const ConjClassSet &b)
  {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

private:
  int n_ = 0;
  std::vector<bool> members_;
  BigInt size_ = 0;
  BigInt order_ = 1;
};

inline constexpr int kMaxInteractionN = 14;

/// E(l, m) = number of T_n edges between classes l and m (l != m);
/// E(l, l) = number of edges inside class l. Symmetric. Entries are exact
/// in 64 bits for n <= 14.
class InteractionMatrix {
public:
  InteractionMatrix(int n, std::size_t classes, std::vector<std::int64_t> entries);

  int n() const noexcept { return n_; }
  std::size_t class_count() const noexcept { return p_; }
  std::int64_t operator()(std::size_t a, std::size_t b) const { return e_[a * p_ + b]; }

  /// Edges leaving class a towards every other class.
  std::int64_t external_degree(std::size_t a) const;

private:
  int n_;
  std::size_t p_;
  std::vector<std::int64_t> e_;
};

/// Built from one representative per class and conjugation-invariance of
/// T_n; checks the row-sum identity and throws InvariantViolation if it
/// fails. n <= 14.
InteractionMatrix interaction_matrix(const PartitionTable &table);

/// sum over l in A, m not in A of E(l, m).
BigInt boundary_via_classes(const ConjClassSet &set, const InteractionMatrix &matrix);

/// A_s: permutations with at least s fixed points. 1 <= s <= n; s = 0
/// is accepted and gives S_n.
ConjClassSet make_A_s(const PartitionTable &table, int s);

} // namespace symiso

#endif // SYMISO_CLASS_SET_HPP
