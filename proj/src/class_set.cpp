#include "symiso/class_set.hpp"

#include <string>

#include "symiso/permutation.hpp"

namespace symiso {

ConjClassSet::ConjClassSet(const PartitionTable &table, std::vector<bool> members)
    : n_(table.n()), members_(std::move(members)), order_(factorial(static_cast<unsigned>(table.n())))
{
  if (members_.size() != table.size())
    throw std::invalid_argument("ConjClassSet: membership length differs from p(n)");
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i])
      size_ += class_size(table[i]);
}

ConjClassSet ConjClassSet::none(const PartitionTable &table)
{
  return ConjClassSet(table, std::vector<bool>(table.size(), false));
}

ConjClassSet ConjClassSet::all(const PartitionTable &table)
{
  return ConjClassSet(table, std::vector<bool>(table.size(), true));
}

ConjClassSet ConjClassSet::from_classes(const PartitionTable &table, std::span<const Partition> classes)
{
  std::vector<bool> members(table.size(), false);
  for (const auto &c : classes)
    members[table.index_of(c)] = true;
  return ConjClassSet(table, std::move(members));
}

ConjClassSet ConjClassSet::from_mask(const PartitionTable &table, std::uint64_t mask)
{
  if (table.size() > 64)
    throw std::out_of_range("ConjClassSet::from_mask: p(n) exceeds 64");
  if (table.size() < 64 && (mask >> table.size()) != 0)
    throw std::invalid_argument("ConjClassSet::from_mask: bits beyond p(n)");
  std::vector<bool> members(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    members[i] = (mask >> i) & 1u;
  return ConjClassSet(table, std::move(members));
}

ConjClassSet ConjClassSet::parse(const PartitionTable &table, std::string_view text)
{
  std::vector<Partition> classes;
  std::size_t start = 0;
  std::string s(text);
  bool any_content = s.find_first_not_of(" \t\r\n") != std::string::npos;
  if (!any_content)
    return none(table);
  while (true) {
    auto comma = s.find(',', start);
    std::string token = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ParseError("empty class in list: \"" + s + "\"");
    Partition p = Partition::parse(token);
    if (p.n() != table.n())
      throw ParseError("cycle type " + p.to_string() + " is not a partition of " + std::to_string(table.n()));
    classes.push_back(std::move(p));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return from_classes(table, classes);
}

ConjClassSet ConjClassSet::complement() const
{
  ConjClassSet c(*this);
  c.members_.flip();
  c.size_ = order_ - size_;
  return c;
}

std::vector<std::size_t> ConjClassSet::member_indices() const
{
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i])
      idx.push_back(i);
  return idx;
}

std::uint64_t ConjClassSet::mask() const
{
  if (members_.size() > 64)
    throw std::out_of_range("ConjClassSet::mask: p(n) exceeds 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i])
      m |= std::uint64_t{1} << i;
  return m;
}

std::vector<std::string> ConjClassSet::to_strings(const PartitionTable &table) const
{
  std::vector<std::string> out;
  for (auto i : member_indices())
    out.push_back(table[i].to_string());
  return out;
}

InteractionMatrix::InteractionMatrix(int n, std::size_t classes, std::vector<std::int64_t> entries)
    : n_(n), p_(classes), e_(std::move(entries))
{
  if (e_.size() != p_ * p_)
    throw std::invalid_argument("InteractionMatrix: entry count is not p(n)^2");
}

std::int64_t InteractionMatrix::external_degree(std::size_t a) const
{
  std::int64_t s = 0;
  for (std::size_t b = 0; b < p_; ++b)
    if (b != a)
      s += (*this)(a, b);
  return s;
}

InteractionMatrix interaction_matrix(const PartitionTable &table)
{
  const int n = table.n();
  if (n > kMaxInteractionN)
    throw std::out_of_range("interaction_matrix: n must be at most 14");
  const std::size_t p = table.size();

  // ordered[l][m] counts pairs (x in l, y in m) with x ~ y; every x in l
  // sees the same neighbour classes as the representative.
  std::vector<std::int64_t> ordered(p * p, 0);
  std::vector<std::int64_t> sizes(p);
  for (std::size_t l = 0; l < p; ++l) {
    sizes[l] = to_int64(class_size(table[l]));
    const PermWord rep = class_representative(table[l]);
    std::vector<int> img = rep.images();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        const std::size_t m = table.index_of(cycle_type(img));
        ordered[l * p + m] += sizes[l];
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      }
  }

  std::vector<std::int64_t> e(p * p, 0);
  const std::int64_t degree = static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t m = 0; m < p; ++m) {
      if (l == m) {
        if (ordered[l * p + l] % 2 != 0)
          throw InvariantViolation("interaction_matrix: odd within-class pair count");
        e[l * p + l] = ordered[l * p + l] / 2;
      } else {
        if (ordered[l * p + m] != ordered[m * p + l])
          throw InvariantViolation("interaction_matrix: asymmetric edge count between " + table[l].to_string() +
                                   " and " + table[m].to_string());
        e[l * p + m] = ordered[l * p + m];
      }
    }
  }
  InteractionMatrix matrix(n, p, std::move(e));
  for (std::size_t l = 0; l < p; ++l)
    if (matrix.external_degree(l) + 2 * matrix(l, l) != sizes[l] * degree)
      throw InvariantViolation("interaction_matrix: row-sum identity fails for class " + table[l].to_string());
  return matrix;
}

BigInt boundary_via_classes(const ConjClassSet &set, const InteractionMatrix &matrix)
{
  if (set.n() != matrix.n() || set.class_count() != matrix.class_count())
    throw std::invalid_argument("boundary_via_classes: n mismatch");
  BigInt total = 0;
  for (std::size_t l = 0; l < matrix.class_count(); ++l) {
    if (!set.contains(l))
      continue;
    std::int64_t row = 0;
    for (std::size_t m = 0; m < matrix.class_count(); ++m)
      if (!set.contains(m))
        row += matrix(l, m);
    total += BigInt(static_cast<long>(row));
  }
  return total;
}

ConjClassSet make_A_s(const PartitionTable &table, int s)
{
  if (s < 0 || s > table.n())
    throw std::invalid_argument("make_A_s: need 0 <= s <= n");
  std::vector<bool> members(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    members[i] = table[i].multiplicity(1) >= s;
  return ConjClassSet(table, std::move(members));
}

} // namespace symiso
