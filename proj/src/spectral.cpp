#include "symiso/spectral.hpp"

#include <string>

namespace symiso {

std::int64_t laplacian_eigenvalue(const Partition &alpha)
{
  const std::int64_t n = alpha.n();
  std::int64_t twice = n * (n - 1);
  for (int idx = 0; idx < alpha.length(); ++idx) {
    const std::int64_t i = idx + 1;
    const std::int64_t a = alpha.parts()[static_cast<std::size_t>(idx)];
    twice -= (a - i) * (a - i + 1) - i * (i - 1);
  }
  if (twice % 2 != 0)
    throw InvariantViolation("laplacian_eigenvalue: non-integral value for " + alpha.to_string());
  return twice / 2;
}

EigenvalueTable eigenvalue_table(const PartitionTable &table)
{
  EigenvalueTable t{table.n(), {}};
  t.mu.reserve(table.size());
  for (const auto &alpha : table)
    t.mu.push_back(laplacian_eigenvalue(alpha));
  return t;
}

std::int64_t two_row_eigenvalue(int t, int n)
{
  if (t < 0 || 2 * t > n)
    throw std::invalid_argument("two_row_eigenvalue: need 0 <= t <= n/2");
  const std::int64_t tt = t, nn = n;
  return tt * nn - tt * tt + tt;
}

bool verify_eigenvector(const PartitionTable &table, const ClassFunction &chi, std::int64_t mu)
{
  const int n = table.n();
  if (n > kMaxEigenvectorCheckN)
    throw std::out_of_range("verify_eigenvector: n must be at most 9");
  if (chi.size() != table.size())
    throw std::invalid_argument("verify_eigenvector: class function length differs from p(n)");
  const BigInt degree = n * (n - 1) / 2;
  for (std::size_t l = 0; l < table.size(); ++l) {
    std::vector<int> img = class_representative(table[l]).images();
    BigInt neighbours = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        neighbours += chi[table.index_of(cycle_type(img))];
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      }
    if (degree * chi[l] - neighbours != BigInt(static_cast<long>(mu)) * chi[l])
      return false;
  }
  return true;
}

bool verify_eigenvector(const Partition &alpha)
{
  if (alpha.n() > kMaxEigenvectorCheckN)
    throw std::out_of_range("verify_eigenvector: n must be at most 9");
  CharacterTable chars(alpha.n());
  const auto &table = chars.partitions();
  return verify_eigenvector(table, chars.row(table.index_of(alpha)), laplacian_eigenvalue(alpha));
}

Rational WeightVector::w(std::size_t alpha) const
{
  Rational r(W[alpha], group_order);
  r.canonicalize();
  return r;
}

WeightVector weights(const ConjClassSet &set, const CharacterTable &chars)
{
  if (set.n() != chars.n())
    throw std::invalid_argument("weights: n mismatch");
  WeightVector out{chars.n(), std::vector<BigInt>(chars.size(), 0), chars.group_order()};
  const auto members = set.member_indices();
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (auto l : members)
      out.W[a] += chars.class_size(l) * chars.value(a, l);
  return out;
}

BigInt spectral_boundary(const WeightVector &w, const EigenvalueTable &mu)
{
  if (w.W.size() != mu.mu.size())
    throw std::invalid_argument("spectral_boundary: weight and eigenvalue tables differ in length");
  BigInt total = 0;
  for (std::size_t a = 0; a < w.W.size(); ++a)
    total += BigInt(static_cast<long>(mu.mu[a])) * w.W[a] * w.W[a];
  if (total % w.group_order != 0)
    throw InvariantViolation("spectral_boundary: sum mu W^2 = " + total.get_str() + " is not divisible by n!");
  return total / w.group_order;
}

BigInt spectral_boundary(const ConjClassSet &set, const CharacterTable &chars)
{
  return spectral_boundary(weights(set, chars), eigenvalue_table(chars.partitions()));
}

Rational diaconis_lower_bound(const BigInt &size, int n)
{
  if (n < 1)
    throw std::invalid_argument("diaconis_lower_bound: n must be positive");
  const BigInt order = factorial(static_cast<unsigned>(n));
  if (size < 0 || size > order)
    throw std::invalid_argument("diaconis_lower_bound: need 0 <= |A| <= n!");
  Rational r(size * (order - size), factorial(static_cast<unsigned>(n - 1)));
  r.canonicalize();
  return r;
}

} // namespace symiso
