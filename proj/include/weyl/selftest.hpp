#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/oracles.hpp"

namespace weyl {

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // the failing input, verbatim; empty if none

  bool passed() const noexcept { return failures == 0; }
};

struct SelftestSummary {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

// Case i of a suite draws from derive_seed(seed, suite, i), so the summary
// does not depend on the thread count.
SuiteResult multiplication_suite(std::uint64_t seed, std::int64_t cases, const MulFn& mul);
SuiteResult representation_suite(std::uint64_t seed, std::int64_t cases);
SuiteResult duality_suite(std::uint64_t seed, std::int64_t cases);
SuiteResult power_support_suite(std::uint64_t seed, std::int64_t cases);
SuiteResult bracket_power_suite(std::uint64_t seed, std::int64_t cases);

/// Suites (a) to (e) against the library kernels.
SelftestSummary oracle_suite(std::uint64_t seed, std::int64_t cases);

}  // namespace weyl
