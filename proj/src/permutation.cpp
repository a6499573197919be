#include "symiso/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace symiso {

PermWord::PermWord(std::vector<int> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("PermWord: not a bijection of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PermWord PermWord::identity(int n)
{
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return PermWord(std::move(img));
}

PermWord PermWord::compose(const PermWord &rhs) const
{
  if (rhs.n() != n())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(images_.size());
  for (int i = 1; i <= n(); ++i)
    img[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
  return PermWord(std::move(img));
}

PermWord PermWord::inverse() const
{
  std::vector<int> img(images_.size());
  for (int i = 1; i <= n(); ++i)
    img[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return PermWord(std::move(img));
}

PermWord PermWord::swap_positions(int i, int j) const
{
  if (i < 1 || j < 1 || i > n() || j > n())
    throw std::out_of_range("swap_positions: index outside [n]");
  PermWord r = *this;
  std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(j - 1)]);
  return r;
}

std::uint64_t factorial_u64(int n)
{
  if (n < 0 || n > kMaxRankN)
    throw std::out_of_range("factorial_u64: n must lie in [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank_lex(std::span<const int> images)
{
  const int n = static_cast<int>(images.size());
  if (n > kMaxRankN)
    throw std::out_of_range("perm_rank_lex: n must be at most 20");
  // Lehmer code: digit i counts later entries smaller than images[i].
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      smaller += images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)];
    rank = rank * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return rank;
}

std::uint64_t perm_rank_lex(const PermWord &sigma) { return perm_rank_lex(sigma.images()); }

PermWord perm_unrank_lex(int n, std::uint64_t r)
{
  if (n < 0 || n > kMaxRankN)
    throw std::out_of_range("perm_unrank_lex: n must lie in [0, 20]");
  if (r >= factorial_u64(n))
    throw std::out_of_range("perm_unrank_lex: rank " + std::to_string(r) + " >= " + std::to_string(n) + "!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    std::uint64_t f = factorial_u64(i - 1);
    auto digit = static_cast<std::size_t>(r / f);
    r %= f;
    img.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return PermWord(std::move(img));
}

Partition cycle_type(std::span<const int> images)
{
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Partition cycle_type(const PermWord &sigma) { return cycle_type(sigma.images()); }

int cycle_count(const PermWord &sigma, int length) { return cycle_type(sigma).multiplicity(length); }

PermWord class_representative(const Partition &lambda)
{
  std::vector<int> img(static_cast<std::size_t>(lambda.n()));
  int start = 1;
  for (int len : lambda.parts()) {
    for (int k = 0; k < len; ++k)
      img[static_cast<std::size_t>(start + k - 1)] = start + (k + 1) % len;
    start += len;
  }
  return PermWord(std::move(img));
}

} // namespace symiso
