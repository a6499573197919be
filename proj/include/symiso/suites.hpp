#ifndef SYMISO_SUITES_HPP
#define SYMISO_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symiso/report.hpp"

namespace symiso {

struct SuiteOptions {
  /// Upper bound on n for every sweep in the suite; each check also caps
  /// it at its own feasibility limit. Unset means the suite default.
  std::optional<int> max_n;
  /// Seeds the std::mt19937_64 used for sampled class subsets.
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
};

/// spectral, characters, census, bounds, appendix, conjectures
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions &options);

} // namespace symiso

#endif // SYMISO_SUITES_HPP
