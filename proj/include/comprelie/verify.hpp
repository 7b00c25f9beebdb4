#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace comprelie {

struct CheckResult {
  std::string check;
  bool passed = true;
  // First counterexample found, empty when the check passed.
  std::string witness;
};

struct Check {
  std::string name;
  std::string summary;
  std::function<CheckResult(std::uint64_t seed)> run;
};

// The acceptance checks in their fixed order. Each is pure given the seed.
const std::vector<Check>& acceptance_checks();

// Runs the checks, concurrently if asked; results keep the input order. An
// exception inside a check is reported as its failure.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, bool concurrent = true);

// One line per check: "PASS name" or "FAIL name: witness".
std::string report_text(const std::vector<CheckResult>& results);
// [{"check": ..., "status": "pass"|"fail", "witness": ...}]; witness only on failure.
nlohmann::json report_json(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace comprelie
