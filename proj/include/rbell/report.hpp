#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace rbell {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Outcome of an identity check. `checks` decide pass/fail; `diagnostics`
/// record forms that are evaluated and reported but never fail the check
/// (for instance an identity as printed in the literature when it differs
/// from the form that actually holds).
struct IdentityReport {
  std::vector<CheckResult> checks;
  std::vector<CheckResult> diagnostics;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  void diagnose(std::string name, bool ok, std::string detail = {});
  void append(IdentityReport other);
  nlohmann::json to_json() const;
};

}  // namespace rbell
