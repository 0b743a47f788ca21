#ifndef MTF_VERIFY_HPP
#define MTF_VERIFY_HPP

// Property suites run by `mtf verify` and the acceptance binary. Every report
// name starts with "cN." where N is the acceptance criterion it serves.

#include "mtf/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mtf {

struct SuiteResult {
  std::string suite;
  std::vector<CertReport> reports;

  bool pass() const;
};

/// gauge, mintime, signed, sdist.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

/// One suite by name, or all of them for "all".
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed = kDefaultSeed);

}  // namespace mtf

#endif  // MTF_VERIFY_HPP
