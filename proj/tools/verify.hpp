#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "rbell/report.hpp"

namespace rbell::cli {

struct VerifyBounds {
  unsigned n_max = 6;
  unsigned r_max = 3;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
};

struct SuiteResult {
  std::string name;
  IdentityReport report;
  /// Crosscheck reports for documented discrepancies; never a failure.
  std::vector<nlohmann::json> known_discrepancies;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paths",    "oracle",     "identities", "families",
                                              "stochastic", "calculus"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyBounds& bounds);

}  // namespace rbell::cli
