#include "symiso/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace symiso {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
    n_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative entry in composition");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty() || s == "0")
    return Partition();

  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = s.find('+', start);
    std::string token = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (token.empty() || token.size() > 3 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed cycle type: \"" + std::string(text) + "\"");
    int v = std::stoi(token);
    if (v <= 0)
      throw ParseError("cycle lengths must be positive: \"" + std::string(text) + "\"");
    parts.push_back(v);
    if (plus == std::string::npos)
      break;
    start = plus + 1;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept
{
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> Partition::multiplicities() const
{
  std::vector<int> m(static_cast<std::size_t>(n_) + 1, 0);
  for (int x : parts_)
    ++m[static_cast<std::size_t>(x)];
  return m;
}

std::string Partition::to_string() const
{
  if (parts_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out.push_back('+');
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

// Descending lexicographic order: largest first part first, and within a
// fixed prefix the largest next part first.
void enumerate(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

PartitionTable::PartitionTable(int n) : n_(n)
{
  if (n < 0 || n > kMaxPartitionN)
    throw std::out_of_range("partitions_of: n must lie in [0, 40], got " + std::to_string(n));
  std::vector<int> prefix;
  enumerate(n, n, prefix, list_);
  for (std::size_t i = 0; i < list_.size(); ++i)
    index_.emplace(list_[i].parts(), i);
}

std::size_t PartitionTable::index_of(const Partition &p) const
{
  auto it = index_.find(p.parts());
  if (p.n() != n_ || it == index_.end())
    throw std::invalid_argument("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

PartitionTable partitions_of(int n) { return PartitionTable(n); }

bool dominates(const Partition &beta, const Partition &alpha)
{
  if (beta.n() != alpha.n())
    throw std::invalid_argument("dominates: partitions of different integers");
  int sb = 0, sa = 0;
  std::size_t len = static_cast<std::size_t>(std::max(beta.length(), alpha.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sb += beta.part(i);
    sa += alpha.part(i);
    if (sb < sa)
      return false;
  }
  return true;
}

BigInt class_size(const Partition &lambda)
{
  BigInt centralizer = 1;
  auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
    centralizer *= pw * factorial(static_cast<unsigned>(m[i]));
  }
  return factorial(static_cast<unsigned>(lambda.n())) / centralizer;
}

} // namespace symiso
