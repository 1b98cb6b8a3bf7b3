#pragma once

#include <string>

#include <json.hpp>

namespace rblab {

// %.17g — round-trip-safe and byte-stable across runs. Non-finite values
// become the strings "inf", "-inf", "nan".
std::string format_double(double v);

// Canonical bytes for a report: object keys sorted, numbers via
// format_double, no whitespace. Same value -> same bytes, always.
std::string canonical_json(const nlohmann::json& j);

// CSV view: a "table" member {"columns": [...], "rows": [[...]]} (searched
// for at the top level, then under "results") becomes header + data rows;
// otherwise every scalar leaf is flattened to a dotted-path column and the
// report becomes a header row plus one value row.
std::string report_csv(const nlohmann::json& j);

}  // namespace rblab
