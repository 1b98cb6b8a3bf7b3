#include "rblab/serialization.hpp"

#include <cmath>
#include <limits>

#include "rblab/errors.hpp"

namespace rblab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double json_number(const nlohmann::json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw ConfigError(path, "expected a number (or \"inf\")");
}

const nlohmann::json& json_field(const nlohmann::json& j, const char* field,
                                 const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto it = j.find(field);
  if (it == j.end()) throw ConfigError(path + "." + field, "missing field");
  return *it;
}

double json_field_number(const nlohmann::json& j, const char* field, const std::string& path) {
  return json_number(json_field(j, field, path), path + "." + field);
}

std::int64_t json_field_int(const nlohmann::json& j, const char* field, const std::string& path) {
  const nlohmann::json& v = json_field(j, field, path);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw ConfigError(path + "." + field, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<double> json_number_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(json_number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

nlohmann::json exponent_to_json(double e) {
  if (std::isinf(e)) return "inf";
  return e;
}

nlohmann::json space_to_json(const NormedSpace& s) {
  nlohmann::json j;
  j["dim"] = s.dim;
  j["exponent"] = exponent_to_json(s.exponent);
  if (!s.weights.empty()) j["weights"] = s.weights;
  return j;
}

NormedSpace space_from_json(const nlohmann::json& j, const std::string& path) {
  NormedSpace s;
  s.dim = static_cast<int>(json_field_int(j, "dim", path));
  s.exponent = json_field_number(j, "exponent", path);
  if (j.contains("weights")) s.weights = json_number_array(j["weights"], path + ".weights");
  if (s.dim < 1) throw ConfigError(path + ".dim", "must be >= 1");
  if (!(s.exponent >= 1.0)) throw ConfigError(path + ".exponent", "must be >= 1");
  if (!s.weights.empty() && static_cast<int>(s.weights.size()) != s.dim)
    throw ConfigError(path + ".weights", "length must equal dim");
  return s;
}

nlohmann::json step_to_json(const StepFunction& f) {
  nlohmann::json j;
  j["weights"] = f.space.weights;
  j["values"] = f.values;
  return j;
}

StepFunction step_from_json(const nlohmann::json& j, const std::string& path) {
  StepFunction f;
  f.space.weights = json_number_array(json_field(j, "weights", path), path + ".weights");
  f.values = json_number_array(json_field(j, "values", path), path + ".values");
  if (f.space.weights.size() != f.values.size())
    throw ConfigError(path + ".values", "length must match weights");
  if (f.values.empty()) throw ConfigError(path + ".values", "must be nonempty");
  for (std::size_t i = 0; i < f.space.weights.size(); ++i)
    if (!(f.space.weights[i] > 0.0))
      throw ConfigError(path + ".weights[" + std::to_string(i) + "]", "must be positive");
  return f;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty array of rows");
  Matrix m;
  m.rows = static_cast<int>(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    std::vector<double> row = json_number_array(j[r], path + "[" + std::to_string(r) + "]");
    if (r == 0) {
      m.cols = static_cast<int>(row.size());
      if (m.cols < 1) throw ConfigError(path + "[0]", "rows must be nonempty");
    } else if (static_cast<int>(row.size()) != m.cols) {
      throw ConfigError(path + "[" + std::to_string(r) + "]", "ragged matrix rows");
    }
    m.a.insert(m.a.end(), row.begin(), row.end());
  }
  return m;
}

nlohmann::json family_to_json(const OperatorFamily& fam) {
  nlohmann::json j;
  j["p"] = exponent_to_json(fam.domain.exponent);
  j["q"] = exponent_to_json(fam.codomain.exponent);
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : fam.operators) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  if (!fam.domain.weights.empty()) j["domain_weights"] = fam.domain.weights;
  if (!fam.codomain.weights.empty()) j["codomain_weights"] = fam.codomain.weights;
  return j;
}

OperatorFamily family_from_json(const nlohmann::json& j, const std::string& path) {
  OperatorFamily fam;
  double p = json_field_number(j, "p", path);
  double q = json_field_number(j, "q", path);
  const nlohmann::json& mats = json_field(j, "matrices", path);
  if (!mats.is_array() || mats.empty())
    throw ConfigError(path + ".matrices", "expected a nonempty array");
  for (std::size_t i = 0; i < mats.size(); ++i)
    fam.operators.push_back(matrix_from_json(mats[i], path + ".matrices[" + std::to_string(i) + "]"));
  int rows = fam.operators.front().rows, cols = fam.operators.front().cols;
  for (const auto& m : fam.operators)
    if (m.rows != rows || m.cols != cols)
      throw ConfigError(path + ".matrices", "operators must share one shape");
  fam.domain = NormedSpace::lp(cols, p);
  fam.codomain = NormedSpace::lp(rows, q);
  if (j.contains("domain_weights")) {
    fam.domain.weights = json_number_array(j["domain_weights"], path + ".domain_weights");
    if (static_cast<int>(fam.domain.weights.size()) != cols)
      throw ConfigError(path + ".domain_weights", "length must equal matrix columns");
  }
  if (j.contains("codomain_weights")) {
    fam.codomain.weights = json_number_array(j["codomain_weights"], path + ".codomain_weights");
    if (static_cast<int>(fam.codomain.weights.size()) != rows)
      throw ConfigError(path + ".codomain_weights", "length must equal matrix rows");
  }
  return fam;
}

nlohmann::json grid_to_json(const GridFunction& f) {
  nlohmann::json j;
  j["a"] = f.a;
  j["b"] = f.b;
  if (f.kind == ValueKind::scalar) {
    j["values"] = f.scalars;
  } else if (f.kind == ValueKind::vector) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : f.vectors) vals.push_back(v.coords);
    j["values"] = std::move(vals);
    j["exponent"] = exponent_to_json(f.vectors.empty() ? 2.0 : f.vectors.front().space.exponent);
  } else {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& m : f.matrices) vals.push_back(matrix_to_json(m));
    j["values"] = std::move(vals);
    j["p"] = exponent_to_json(f.domain.exponent);
    j["q"] = exponent_to_json(f.codomain.exponent);
  }
  return j;
}

GridFunction grid_from_json(const nlohmann::json& j, const std::string& path) {
  double a = json_field_number(j, "a", path);
  double b = json_field_number(j, "b", path);
  const nlohmann::json& vals = json_field(j, "values", path);
  if (!vals.is_array() || vals.size() < 2)
    throw ConfigError(path + ".values", "expected an array of at least 2 samples");
  const nlohmann::json& first = vals[0];
  if (first.is_number()) {
    return make_scalar_grid(a, b, json_number_array(vals, path + ".values"));
  }
  if (first.is_array() && !first.empty() && first[0].is_number()) {
    double e = j.contains("exponent") ? json_number(j["exponent"], path + ".exponent") : 2.0;
    std::vector<Vector> vecs;
    NormedSpace space = NormedSpace::lp(static_cast<int>(first.size()), e);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      std::vector<double> c =
          json_number_array(vals[i], path + ".values[" + std::to_string(i) + "]");
      if (static_cast<int>(c.size()) != space.dim)
        throw ConfigError(path + ".values[" + std::to_string(i) + "]", "ragged vector samples");
      vecs.push_back(Vector{space, std::move(c)});
    }
    return make_vector_grid(a, b, std::move(vecs));
  }
  if (first.is_array() && !first.empty() && first[0].is_array()) {
    double p = j.contains("p") ? json_number(j["p"], path + ".p") : 2.0;
    double q = j.contains("q") ? json_number(j["q"], path + ".q") : 2.0;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < vals.size(); ++i)
      mats.push_back(matrix_from_json(vals[i], path + ".values[" + std::to_string(i) + "]"));
    NormedSpace dom = NormedSpace::lp(mats.front().cols, p);
    NormedSpace cod = NormedSpace::lp(mats.front().rows, q);
    return make_operator_grid(a, b, std::move(mats), dom, cod);
  }
  throw ConfigError(path + ".values", "samples must be numbers or (nested) arrays");
}

nlohmann::json moment_to_json(const MomentEstimate& m) {
  nlohmann::json j;
  j["value"] = m.value;
  j["method"] = m.method;
  j["samples"] = m.samples;
  j["seed"] = m.seed;
  j["stderr"] = m.stderr_est;
  return j;
}

nlohmann::json random_config_to_json(const RandomConfig& cfg) {
  nlohmann::json j;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["exact_threshold"] = cfg.exact_threshold;
  j["partitions"] = cfg.partitions;
  j["restarts"] = cfg.restarts;
  return j;
}

RandomConfig random_config_from_json(const nlohmann::json& j, const std::string& path) {
  RandomConfig cfg;
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      throw ConfigError(path + ".seed", "expected an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) cfg.samples = json_field_int(j, "samples", path);
  if (j.contains("exact_threshold"))
    cfg.exact_threshold = static_cast<int>(json_field_int(j, "exact_threshold", path));
  if (j.contains("partitions"))
    cfg.partitions = static_cast<int>(json_field_int(j, "partitions", path));
  if (j.contains("restarts")) cfg.restarts = static_cast<int>(json_field_int(j, "restarts", path));
  return cfg;
}

}  // namespace rblab
