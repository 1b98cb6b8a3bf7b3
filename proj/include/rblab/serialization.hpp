#pragma once

#include <string>

#include <json.hpp>

#include "rblab/besov.hpp"
#include "rblab/integral_ops.hpp"
#include "rblab/measure.hpp"
#include "rblab/moments.hpp"
#include "rblab/rbound.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

// JSON wire formats.  Exponents serialize as numbers, infinity as the string
// "inf"; parsers accept both.  All from_json functions throw ConfigError with
// the offending field path.

// field access helpers
double json_number(const nlohmann::json& j, const std::string& path);  // accepts "inf"
double json_field_number(const nlohmann::json& j, const char* field, const std::string& path);
std::int64_t json_field_int(const nlohmann::json& j, const char* field, const std::string& path);
const nlohmann::json& json_field(const nlohmann::json& j, const char* field,
                                 const std::string& path);
std::vector<double> json_number_array(const nlohmann::json& j, const std::string& path);

nlohmann::json exponent_to_json(double e);

// {"dim":..., "exponent":..., "weights":[...]} — weights omitted when all 1
nlohmann::json space_to_json(const NormedSpace& s);
NormedSpace space_from_json(const nlohmann::json& j, const std::string& path);

// {"weights":[...],"values":[...]}
nlohmann::json step_to_json(const StepFunction& f);
StepFunction step_from_json(const nlohmann::json& j, const std::string& path);

// {"p":...,"q":...,"matrices":[[[...]]]} row-major; optional
// "domain_weights"/"codomain_weights"
nlohmann::json family_to_json(const OperatorFamily& fam);
OperatorFamily family_from_json(const nlohmann::json& j, const std::string& path);

// {"a":...,"b":...,"values":[...]} — scalars, or one nesting level for
// vector samples (Euclidean coordinates)
nlohmann::json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json moment_to_json(const MomentEstimate& m);

nlohmann::json random_config_to_json(const RandomConfig& cfg);
// absent fields keep their defaults
RandomConfig random_config_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace rblab
