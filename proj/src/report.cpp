#include "rblab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

namespace rblab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void escape_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write_canonical(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      // nlohmann objects iterate in key order already; sort defensively
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
      std::sort(keys.begin(), keys.end());
      out += '{';
      bool first = true;
      for (const auto& k : keys) {
        if (!first) out += ',';
        first = false;
        escape_string(k, out);
        out += ':';
        write_canonical(j.at(k), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        write_canonical(e, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::string:
      escape_string(j.get<std::string>(), out);
      break;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case nlohmann::json::value_t::number_float: {
      std::string s = format_double(j.get<double>());
      // bare inf/nan are not JSON literals; quote them
      if (s == "inf" || s == "-inf" || s == "nan")
        escape_string(s, out);
      else
        out += s;
      break;
    }
    default:
      out += "null";
  }
}

std::string csv_cell(const nlohmann::json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_boolean())
    s = v.get<bool>() ? "true" : "false";
  else if (v.is_number_integer())
    s = std::to_string(v.get<std::int64_t>());
  else if (v.is_number_unsigned())
    s = std::to_string(v.get<std::uint64_t>());
  else if (v.is_number_float())
    s = format_double(v.get<double>());
  else
    s = canonical_json(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  return s;
}

void flatten(const nlohmann::json& j, const std::string& prefix,
             std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string p = prefix.empty() ? it.key() : prefix + "." + it.key();
      flatten(it.value(), p, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out[prefix] = csv_cell(j);
  }
}

const nlohmann::json* find_table(const nlohmann::json& j) {
  auto is_table = [](const nlohmann::json& t) {
    return t.is_object() && t.contains("columns") && t.contains("rows") &&
           t["columns"].is_array() && t["rows"].is_array();
  };
  if (j.contains("table") && is_table(j["table"])) return &j["table"];
  if (j.contains("results") && j["results"].is_object() && j["results"].contains("table") &&
      is_table(j["results"]["table"]))
    return &j["results"]["table"];
  return nullptr;
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
  std::string out;
  write_canonical(j, out);
  return out;
}

std::string report_csv(const nlohmann::json& j) {
  std::string out;
  if (const nlohmann::json* table = find_table(j)) {
    bool first = true;
    for (const auto& c : (*table)["columns"]) {
      if (!first) out += ',';
      first = false;
      out += csv_cell(c);
    }
    out += '\n';
    for (const auto& row : (*table)["rows"]) {
      first = true;
      for (const auto& cell : row) {
        if (!first) out += ',';
        first = false;
        out += csv_cell(cell);
      }
      out += '\n';
    }
    return out;
  }
  std::map<std::string, std::string> flat;
  flatten(j, "", flat);
  bool first = true;
  for (const auto& [k, v] : flat) {
    (void)v;
    if (!first) out += ',';
    first = false;
    out += csv_cell(nlohmann::json(k));
  }
  out += '\n';
  first = true;
  for (const auto& [k, v] : flat) {
    (void)k;
    if (!first) out += ',';
    first = false;
    out += v;
  }
  out += '\n';
  return out;
}

}  // namespace rblab
