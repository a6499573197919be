#ifndef SYMISO_REPORT_HPP
#define SYMISO_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symiso/exact.hpp"

namespace symiso {

using Json = nlohmann::ordered_json;

/// One checked inequality or identity. Report-only records (open
/// conjectures) carry asserted = false and never count as failures.
struct CheckRecord {
  std::string check_id;
  Json params = Json::object();
  Json lhs;
  Json rhs;
  bool holds = false;
  Json witness;
  bool asserted = true;

  Json to_json() const;
};

class VerificationReport {
public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string &suite() const noexcept { return suite_; }
  const std::vector<CheckRecord> &records() const noexcept { return records_; }

  CheckRecord &add(CheckRecord record);
  void append(const VerificationReport &other);

  /// Asserted records that failed.
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  Json summary() const;

private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

/// Exact values go into JSON as decimal strings.
inline Json exact_json(const BigInt &x) { return to_string(x); }
inline Json exact_json(const Rational &x) { return to_string(x); }

} // namespace symiso

#endif // SYMISO_REPORT_HPP
