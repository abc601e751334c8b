#ifndef HOMOGKIT_VERIFY_HPP
#define HOMOGKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace homogkit {

// Outcome of one verification suite. A suite bundles an exhaustive sweep over
// a small universe with seeded randomized layers on top, counts every checked
// instance, and passes only with zero mismatches. detail summarizes the
// coverage and, on failure, describes the first mismatch found.
struct VerifyResult {
  std::string suite;   // CLI-facing name, e.g. "fact-4015"
  std::string claim;   // claim identifier embedded in reports, e.g. "Fact-4015-oracle"
  bool passed = false;
  long long cases = 0;
  long long mismatches = 0;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 0x686F6D6F676B6974ULL;

// The fixed roster, in the order suites are reported.
std::vector<std::string> verifySuiteNames();

bool isVerifySuiteName(const std::string& name);

// Runs one suite by name; throws std::invalid_argument on an unknown name.
// The seed drives every randomized layer, so equal seeds give equal reports.
VerifyResult runVerifySuite(const std::string& name, std::uint64_t seed);

// Runs the whole roster in order.
std::vector<VerifyResult> runAllVerifySuites(std::uint64_t seed);

}  // namespace homogkit

#endif
