#include "symiso/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

namespace symiso {

std::int64_t DeterminantalExpansion::abs_coefficient_sum() const
{
  std::int64_t s = 0;
  for (const auto &[beta, c] : terms)
    s += c < 0 ? -c : c;
  return s;
}

namespace {

void require_same_n(const Partition &a, const Partition &b, const char *what)
{
  if (a.n() != b.n())
    throw std::invalid_argument(std::string(what) + ": partitions of different integers (" + a.to_string() + " vs " +
                                b.to_string() + ")");
}

// Cycle lengths of lambda grouped as (length, multiplicity).
struct CycleProfile {
  std::vector<int> lengths;
  std::vector<int> counts;
};

CycleProfile profile_of(const Partition &lambda)
{
  CycleProfile p;
  for (int x : lambda.parts()) {
    if (!p.lengths.empty() && p.lengths.back() == x)
      ++p.counts.back();
    else {
      p.lengths.push_back(x);
      p.counts.push_back(1);
    }
  }
  return p;
}

// Distributes cycles of given lengths into rows, one row at a time. The
// state after filling rows [0, r) is the vector of cycles still unplaced.
class RowFiller {
public:
  RowFiller(const std::vector<int> &rows, CycleProfile profile)
      : rows_(rows), profile_(std::move(profile)), memo_(rows.size())
  {
  }

  BigInt count() { return fill(0, profile_.counts); }

private:
  BigInt fill(std::size_t row, const std::vector<int> &remaining)
  {
    if (row == rows_.size())
      return 1;
    auto &memo = memo_[row];
    if (auto it = memo.find(remaining); it != memo.end())
      return it->second;

    BigInt total = 0;
    std::vector<int> take(remaining.size(), 0);
    choose(row, remaining, 0, rows_[row], take, 1, total);
    memo.emplace(remaining, total);
    return total;
  }

  void choose(std::size_t row, const std::vector<int> &remaining, std::size_t kind, int target,
              std::vector<int> &take, const BigInt &weight, BigInt &total)
  {
    if (target == 0) {
      std::vector<int> rest(remaining);
      for (std::size_t j = 0; j < rest.size(); ++j)
        rest[j] -= take[j];
      total += weight * fill(row + 1, rest);
      return;
    }
    if (kind == remaining.size())
      return;
    const int len = profile_.lengths[kind];
    const int max_take = std::min(remaining[kind], target / len);
    for (int a = 0; a <= max_take; ++a) {
      take[kind] = a;
      choose(row, remaining, kind + 1, target - a * len, take,
             weight * binomial(static_cast<unsigned>(remaining[kind]), static_cast<unsigned>(a)), total);
    }
    take[kind] = 0;
  }

  const std::vector<int> &rows_;
  CycleProfile profile_;
  std::vector<std::map<std::vector<int>, BigInt>> memo_;
};

// Murnaghan-Nakayama on beta-sets (first-column hook lengths): removing a
// border strip of length r moves one bead from b to b - r, with sign
// (-1)^{beads strictly between}.
class MurnaghanNakayama {
public:
  std::int64_t eval(const std::vector<int> &alpha, const std::vector<int> &lambda, std::size_t from)
  {
    if (from == lambda.size())
      return alpha.empty() ? 1 : 0;
    auto key = std::make_pair(alpha, std::vector<int>(lambda.begin() + static_cast<std::ptrdiff_t>(from), lambda.end()));
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    const int r = lambda[from];
    const std::size_t l = alpha.size();
    std::vector<int> beads(l);
    for (std::size_t i = 0; i < l; ++i)
      beads[i] = alpha[i] + static_cast<int>(l - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const int target = beads[i] - r;
      if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end())
        continue;
      int between = 0;
      for (int b : beads)
        between += (b > target && b < beads[i]);

      std::vector<int> moved(beads);
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next(l);
      for (std::size_t j = 0; j < l; ++j)
        next[j] = moved[j] - static_cast<int>(l - 1 - j);
      while (!next.empty() && next.back() == 0)
        next.pop_back();

      const std::int64_t sub = eval(next, lambda, from + 1);
      total += (between % 2 ? -sub : sub);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

int inversion_parity(const std::vector<int> &perm)
{
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      inv += perm[i] > perm[j];
  return inv % 2;
}

} // namespace

BigInt xi_on_class(const Partition &beta, const Partition &lambda)
{
  require_same_n(beta, lambda, "xi_on_class");
  RowFiller filler(beta.parts(), profile_of(lambda));
  return filler.count();
}

BigInt xi_two_row(int s, const Partition &lambda)
{
  const int n = lambda.n();
  if (s < 0 || s > n)
    throw std::invalid_argument("xi_two_row: need 0 <= s <= n");
  s = std::min(s, n - s);

  // ways[t] = number of sets of cycles of total length t
  std::vector<BigInt> ways(static_cast<std::size_t>(s) + 1, 0);
  ways[0] = 1;
  const auto profile = profile_of(lambda);
  for (std::size_t kind = 0; kind < profile.lengths.size(); ++kind) {
    const int len = profile.lengths[kind];
    const int m = profile.counts[kind];
    std::vector<BigInt> next(ways.size(), 0);
    for (int t = 0; t <= s; ++t) {
      if (ways[static_cast<std::size_t>(t)] == 0)
        continue;
      for (int a = 0; a <= m && t + a * len <= s; ++a)
        next[static_cast<std::size_t>(t + a * len)] +=
            ways[static_cast<std::size_t>(t)] * binomial(static_cast<unsigned>(m), static_cast<unsigned>(a));
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(s)];
}

DeterminantalExpansion determinantal_expansion(const Partition &alpha)
{
  const int u = alpha.n() - alpha.first();
  if (u > kMaxDeterminantalU)
    throw std::out_of_range("determinantal_expansion: n - alpha_1 = " + std::to_string(u) + " exceeds 6");

  // alpha has at most u + 1 rows, and any pi moving a point beyond u + 1
  // produces a negative entry, so S_{u+1} carries every surviving term.
  const std::size_t width = static_cast<std::size_t>(u) + 1;
  std::vector<int> pi(width);
  std::iota(pi.begin(), pi.end(), 1);

  DeterminantalExpansion out{alpha, {}};
  do {
    std::vector<int> seq(width);
    bool negative = false;
    for (std::size_t i = 0; i < width; ++i) {
      seq[i] = alpha.part(i) - static_cast<int>(i + 1) + pi[i];
      negative |= seq[i] < 0;
    }
    if (negative)
      continue;
    const std::int64_t sign = inversion_parity(pi) ? -1 : 1;
    out.terms[Partition::from_unsorted(std::move(seq))] += sign;
  } while (std::next_permutation(pi.begin(), pi.end()));

  std::erase_if(out.terms, [](const auto &kv) { return kv.second == 0; });
  return out;
}

BigInt chi_via_determinantal(const Partition &alpha, const Partition &lambda)
{
  require_same_n(alpha, lambda, "chi_via_determinantal");
  BigInt total = 0;
  for (const auto &[beta, c] : determinantal_expansion(alpha).terms)
    total += BigInt(static_cast<long>(c)) * xi_on_class(beta, lambda);
  return total;
}

std::int64_t murnaghan_nakayama(const Partition &alpha, const Partition &lambda)
{
  require_same_n(alpha, lambda, "murnaghan_nakayama");
  MurnaghanNakayama mn;
  return mn.eval(alpha.parts(), lambda.parts(), 0);
}

namespace {

int checked_table_n(int n)
{
  if (n < 0 || n > kMaxCharacterTableN)
    throw std::out_of_range("character_table: n must lie in [0, 14], got " + std::to_string(n));
  return n;
}

} // namespace

CharacterTable::CharacterTable(int n) : partitions_(checked_table_n(n))
{
  order_ = factorial(static_cast<unsigned>(n));
  class_sizes_.reserve(partitions_.size());
  for (const auto &lambda : partitions_)
    class_sizes_.push_back(symiso::class_size(lambda));

  MurnaghanNakayama mn;
  rows_.reserve(partitions_.size());
  for (const auto &alpha : partitions_) {
    std::vector<BigInt> values;
    values.reserve(partitions_.size());
    for (const auto &lambda : partitions_)
      values.emplace_back(static_cast<long>(mn.eval(alpha.parts(), lambda.parts(), 0)));
    rows_.emplace_back(n, std::move(values));
  }
}

CharacterTable character_table(int n) { return CharacterTable(n); }

BigInt xi_bruteforce(const Partition &beta, const PermWord &sigma)
{
  const int n = beta.n();
  if (sigma.n() != n)
    throw std::invalid_argument("xi_bruteforce: degree mismatch");
  if (n > 7)
    throw std::out_of_range("xi_bruteforce: n must be at most 7");
  BigInt tabloids = factorial(static_cast<unsigned>(n));
  for (int part : beta.parts())
    tabloids /= factorial(static_cast<unsigned>(part));
  if (tabloids > 1000000)
    throw std::out_of_range("xi_bruteforce: more than 10^6 tabloids");

  // label[x] = row holding point x + 1
  std::vector<int> capacity(beta.parts());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::int64_t fixed = 0;
  std::function<void(int)> place = [&](int x) {
    if (x == n) {
      for (int y = 0; y < n; ++y)
        if (label[static_cast<std::size_t>(sigma(y + 1) - 1)] != label[static_cast<std::size_t>(y)])
          return;
      ++fixed;
      return;
    }
    for (std::size_t r = 0; r < capacity.size(); ++r) {
      if (capacity[r] == 0)
        continue;
      --capacity[r];
      label[static_cast<std::size_t>(x)] = static_cast<int>(r);
      place(x + 1);
      ++capacity[r];
    }
  };
  place(0);
  return BigInt(static_cast<long>(fixed));
}

} // namespace symiso
