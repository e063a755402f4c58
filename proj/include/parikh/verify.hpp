#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parikh/scan.hpp"

namespace parikh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

/// The built-in fixture of published values, as JSON text.
const std::string& builtin_fixture();

/// Names of all checks, in the order they run.
std::vector<std::string> check_names();

/// Runs every check (or only `only`) against `fixture_json`. A check whose
/// computed value disagrees with the fixture fails; the others are unaffected.
/// Throws DomainError for an unknown check name.
std::vector<CheckResult> verify_goldens(const std::string& fixture_json, const std::optional<std::string>& only,
                                      const RunConfig& config,
                                      const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace parikh
