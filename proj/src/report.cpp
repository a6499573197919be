#include "symiso/report.hpp"

#include <algorithm>

namespace symiso {

Json CheckRecord::to_json() const
{
  Json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["holds"] = holds;
  j["witness"] = witness;
  j["asserted"] = asserted;
  return j;
}

CheckRecord &VerificationReport::add(CheckRecord record)
{
  records_.push_back(std::move(record));
  return records_.back();
}

void VerificationReport::append(const VerificationReport &other)
{
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::failures() const
{
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord &r) { return r.asserted && !r.holds; }));
}

Json VerificationReport::summary() const
{
  std::size_t report_only = 0;
  for (const auto &r : records_)
    report_only += !r.asserted;
  return {{"suite", suite_},
          {"records", records_.size()},
          {"asserted", records_.size() - report_only},
          {"failures", failures()},
          {"passed", passed()}};
}

} // namespace symiso
