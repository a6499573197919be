#include "symiso/subset_sweep.hpp"

#include <stdexcept>

namespace symiso {

ClassSubsetSweep::ClassSubsetSweep(const InteractionMatrix &matrix, std::span<const std::int64_t> class_sizes)
    : p_(matrix.class_count()), e_(p_ * p_), external_(p_), sizes_(class_sizes.begin(), class_sizes.end())
{
  if (p_ > kMaxSweepClasses)
    throw std::out_of_range("ClassSubsetSweep: too many classes for exhaustive enumeration");
  if (sizes_.size() != p_)
    throw std::invalid_argument("ClassSubsetSweep: class size vector has wrong length");
  for (std::size_t a = 0; a < p_; ++a) {
    for (std::size_t b = 0; b < p_; ++b)
      e_[a * p_ + b] = matrix(a, b);
    external_[a] = matrix.external_degree(a);
  }
}

std::size_t ClassSubsetSweep::shard_count(unsigned workers) const
{
  if (workers <= 1 || p_ == 0)
    return 1;
  std::size_t shards = 1;
  while (shards < 4u * workers && shards < (std::size_t{1} << p_))
    shards <<= 1;
  return shards;
}

} // namespace symiso
