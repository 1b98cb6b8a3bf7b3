#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace rblab {

// One verification criterion of the library's headline guarantees.  `details`
// holds only deterministic content (values through the canonical double
// formatter); `seconds` is wall time and is excluded from the JSON payload so
// repeated runs can be compared byte for byte.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double seconds = 0.0;
};

// Criteria 1..9 compute and check; 10 is the determinism check: given a CLI
// path it runs `<cli> verify-all --quick` twice and compares the captured
// bytes, otherwise it reruns criteria 1..9 twice in-process and compares the
// canonical JSON payloads.
CriterionResult run_criterion(int id, bool quick, const std::string& cli_path);

std::vector<CriterionResult> run_acceptance(bool quick, const std::string& cli_path);

// Deterministic payload: {"criteria": [...], "all_passed": bool}, no timings.
nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace rblab
