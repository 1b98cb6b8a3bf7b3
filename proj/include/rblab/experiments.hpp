#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rblab {

// Batch experiment dispatch: validate the kind-specific parameter object,
// run the computation, wrap results in a report envelope
// {"kind", "config", "results", "provenance"}.  Deterministic: the same
// (kind, params, seed) always produces the same report value.
// Throws ConfigError for schema problems; domain errors propagate.
nlohmann::json run_experiment(const std::string& kind, const nlohmann::json& params,
                              std::optional<std::uint64_t> seed_override);

// The recognized kinds, for CLI wiring and error messages.
const std::vector<std::string>& experiment_kinds();

}  // namespace rblab
