#include "rbell/report.hpp"

#include <algorithm>

namespace rbell {

bool IdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void IdentityReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void IdentityReport::diagnose(std::string name, bool ok, std::string detail) {
  diagnostics.push_back({std::move(name), ok, std::move(detail)});
}

void IdentityReport::append(IdentityReport other) {
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                std::make_move_iterator(other.checks.end()));
  diagnostics.insert(diagnostics.end(), std::make_move_iterator(other.diagnostics.begin()),
                     std::make_move_iterator(other.diagnostics.end()));
}

namespace {

nlohmann::json results_json(const std::vector<CheckResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : results) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

nlohmann::json IdentityReport::to_json() const {
  return {{"passed", passed()}, {"checks", results_json(checks)}, {"diagnostics", results_json(diagnostics)}};
}

}  // namespace rbell
