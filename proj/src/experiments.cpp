#include "rblab/experiments.hpp"

#include <cmath>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/gamma.hpp"
#include "rblab/integral_ops.hpp"
#include "rblab/semigroup.hpp"
#include "rblab/serialization.hpp"
#include "rblab/typecotype.hpp"

namespace rblab {

namespace {

RandomConfig config_from_params(const nlohmann::json& params, const std::string& path,
                                std::optional<std::uint64_t> seed_override) {
  RandomConfig cfg;
  if (params.contains("random")) cfg = random_config_from_json(params["random"], path + ".random");
  if (params.contains("seed")) {
    if (!params["seed"].is_number_integer() && !params["seed"].is_number_unsigned())
      throw ConfigError(path + ".seed", "expected an integer");
    cfg.seed = params["seed"].get<std::uint64_t>();
  }
  if (seed_override) cfg.seed = *seed_override;
  return cfg;
}

std::vector<Vector> vectors_from_params(const nlohmann::json& params, const NormedSpace& space,
                                        const std::string& path) {
  const nlohmann::json& arr = json_field(params, "vectors", path);
  if (!arr.is_array() || arr.empty()) throw ConfigError(path + ".vectors", "expected a nonempty array");
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = path + ".vectors[" + std::to_string(i) + "]";
    std::vector<double> c = json_number_array(arr[i], p);
    if (static_cast<int>(c.size()) != space.dim) throw ConfigError(p, "length must equal space dim");
    xs.push_back(Vector{space, std::move(c)});
  }
  return xs;
}

SearchStrategy strategy_from_params(const nlohmann::json& params, const std::string& path) {
  if (!params.contains("strategy")) return SearchStrategy::coordinate_ascent;
  if (!params["strategy"].is_string()) throw ConfigError(path + ".strategy", "expected a string");
  std::string s = params["strategy"].get<std::string>();
  if (s == "random") return SearchStrategy::random;
  if (s == "coordinate_ascent") return SearchStrategy::coordinate_ascent;
  if (s == "exhaustive_small") return SearchStrategy::exhaustive_small;
  throw ConfigError(path + ".strategy",
                    "expected random | coordinate_ascent | exhaustive_small");
}

nlohmann::json results_rademacher(const nlohmann::json& params, const RandomConfig& cfg) {
  NormedSpace space = space_from_json(json_field(params, "space", "rademacher"), "rademacher.space");
  std::vector<Vector> xs = vectors_from_params(params, space, "rademacher");
  double p = params.contains("p") ? json_number(params["p"], "rademacher.p") : 2.0;
  nlohmann::json out;
  out["moment"] = moment_to_json(rademacher_moment(xs, p, cfg));
  return out;
}

nlohmann::json results_rbound(const nlohmann::json& params, const RandomConfig& cfg) {
  OperatorFamily fam = family_from_json(json_field(params, "family", "rbound"), "rbound.family");
  int N = params.contains("N") ? static_cast<int>(json_field_int(params, "N", "rbound"))
                               : static_cast<int>(fam.operators.size());
  RBoundEstimate est = rbound_lower(fam, N, cfg, strategy_from_params(params, "rbound"));
  nlohmann::json out;
  out["lower_bound"] = est.lower_bound;
  out["ratio_evals"] = est.ratio_evals;
  nlohmann::json witness;
  witness["operator_indices"] = est.witness.operator_indices;
  nlohmann::json vecs = nlohmann::json::array();
  for (const auto& v : est.witness.vectors) vecs.push_back(v.coords);
  witness["vectors"] = std::move(vecs);
  out["witness"] = std::move(witness);
  return out;
}

nlohmann::json results_typecotype(const std::string& kind, const nlohmann::json& params,
                                  const RandomConfig& cfg) {
  NormedSpace space = space_from_json(json_field(params, "space", kind), kind + ".space");
  double e = json_field_number(params, "exponent", kind);
  int N = static_cast<int>(json_field_int(params, "N", kind));
  TypeCotypeReport rep = (kind == "type") ? type_constant_lower(space, e, N, cfg)
                                          : cotype_constant_lower(space, e, N, cfg);
  nlohmann::json out;
  out["constant_lower"] = rep.constant_lower;
  out["basis_probe_ratio"] = rep.basis_probe_ratio;
  out["ratio_evals"] = rep.ratio_evals;
  nlohmann::json table;
  table["columns"] = {"space_exponent", "exponent", "N", "constant_lower"};
  table["rows"] = nlohmann::json::array();
  table["rows"].push_back({exponent_to_json(space.exponent), e, N, rep.constant_lower});
  out["table"] = std::move(table);
  return out;
}

nlohmann::json results_lorentz(const nlohmann::json& params) {
  StepFunction f = step_from_json(json_field(params, "function", "lorentz"), "lorentz.function");
  double p = json_field_number(params, "p", "lorentz");
  double q = json_field_number(params, "q", "lorentz");
  LorentzForm form = LorentzForm::rearrangement;
  if (params.contains("form")) {
    std::string s = params["form"].is_string() ? params["form"].get<std::string>() : "";
    if (s == "rearrangement")
      form = LorentzForm::rearrangement;
    else if (s == "distribution")
      form = LorentzForm::distribution;
    else
      throw ConfigError("lorentz.form", "expected rearrangement | distribution");
  }
  nlohmann::json out;
  out["value"] = lorentz_norm(f, p, q, form);
  return out;
}

nlohmann::json results_besov(const nlohmann::json& params) {
  GridFunction f = grid_from_json(json_field(params, "function", "besov"), "besov.function");
  BesovParams bp;
  bp.s = json_field_number(params, "s", "besov");
  bp.p = json_field_number(params, "p", "besov");
  bp.q = json_field_number(params, "q", "besov");
  if (params.contains("levels"))
    bp.levels = static_cast<int>(json_field_int(params, "levels", "besov"));
  if (params.contains("convention")) {
    std::string s =
        params["convention"].is_string() ? params["convention"].get<std::string>() : "";
    if (s == "restrict")
      bp.convention = ModulusConvention::restrict;
    else if (s == "zero_extend")
      bp.convention = ModulusConvention::zero_extend;
    else
      throw ConfigError("besov.convention", "expected restrict | zero_extend");
  }
  nlohmann::json out;
  out["value"] = lambda_besov_norm(f, bp);
  return out;
}

nlohmann::json results_integral(const nlohmann::json& params, const RandomConfig& cfg) {
  const nlohmann::json& tj = json_field(params, "operator_step", "integral");
  OperatorValuedStep T;
  OperatorFamily fam = family_from_json(tj, "integral.operator_step");
  T.domain = fam.domain;
  T.codomain = fam.codomain;
  T.matrices = fam.operators;
  T.space.weights =
      json_number_array(json_field(tj, "weights", "integral.operator_step"),
                        "integral.operator_step.weights");
  double r = json_field_number(params, "r", "integral");
  int trials = static_cast<int>(json_field_int(params, "trials", "integral"));
  int k = params.contains("k") ? static_cast<int>(json_field_int(params, "k", "integral")) : 8;
  IntegralRboundReport rep = verify_integral_rbound(T, r, trials, cfg, k);
  nlohmann::json out;
  out["empirical_C_max"] = rep.empirical_C_max;
  out["empirical_C_mean"] = rep.empirical_C_mean;
  out["trials"] = rep.trials;
  out["K"] = rep.family_size;
  out["seed"] = rep.seed;
  out["t_lr_norm"] = rep.t_lr_norm;
  out["l1_cap"] = integral_l1_cap(T);
  return out;
}

nlohmann::json results_gamma(const nlohmann::json& params, const RandomConfig& cfg) {
  NormedSpace codomain =
      space_from_json(json_field(params, "codomain", "gamma"), "gamma.codomain");
  nlohmann::json out;
  if (params.contains("operators")) {
    const nlohmann::json& ops = params["operators"];
    if (!ops.is_array() || ops.empty())
      throw ConfigError("gamma.operators", "expected a nonempty array");
    std::vector<GammaOperator> psis;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      GammaOperator psi;
      psi.matrix = matrix_from_json(ops[i], "gamma.operators[" + std::to_string(i) + "]");
      psi.codomain = codomain;
      psi.h_dim = psi.matrix.cols;
      psis.push_back(std::move(psi));
    }
    const nlohmann::json& fsj = json_field(params, "fs", "gamma");
    if (!fsj.is_array() || fsj.size() != psis.size())
      throw ConfigError("gamma.fs", "expected one H-vector per operator");
    std::vector<Vector> fs;
    NormedSpace hspace = NormedSpace::lp(psis.front().h_dim, 2.0);
    for (std::size_t i = 0; i < fsj.size(); ++i) {
      std::vector<double> c = json_number_array(fsj[i], "gamma.fs[" + std::to_string(i) + "]");
      fs.push_back(Vector{hspace, std::move(c)});
    }
    GammaMultiplierReport rep = verify_gamma_multiplier(psis, fs, cfg);
    out["lhs"] = rep.lhs;
    out["sup_f"] = rep.sup_f;
    out["gamma_factor"] = rep.gamma_factor;
    out["rhs"] = rep.rhs;
    out["ratio"] = rep.ratio;
  } else {
    GammaOperator psi;
    psi.matrix = matrix_from_json(json_field(params, "matrix", "gamma"), "gamma.matrix");
    psi.codomain = codomain;
    psi.h_dim = psi.matrix.cols;
    out["norm"] = moment_to_json(gamma_norm(psi, cfg));
  }
  return out;
}

nlohmann::json results_semigroup(const nlohmann::json& params, const RandomConfig& cfg) {
  DiagonalSemigroup g;
  g.rates = json_number_array(json_field(params, "rates", "semigroup"), "semigroup.rates");
  double e = params.contains("exponent") ? json_number(params["exponent"], "semigroup.exponent")
                                         : 2.0;
  g.space = NormedSpace::lp(static_cast<int>(g.rates.size()), e);
  double alpha = json_field_number(params, "alpha", "semigroup");
  double p = json_field_number(params, "p", "semigroup");
  double q = json_field_number(params, "q", "semigroup");
  int N = params.contains("N") ? static_cast<int>(json_field_int(params, "N", "semigroup")) : 4;
  std::vector<double> times =
      json_number_array(json_field(params, "times", "semigroup"), "semigroup.times");
  SemigroupExperimentReport rep = thm_semigroup_experiment(g, alpha, p, q, N, times, cfg);
  nlohmann::json out;
  out["embedding_norm"] = rep.embedding;
  out["lower_bound"] = rep.estimate.lower_bound;
  out["normalized_lower"] = rep.normalized_lower;
  out["holder_values"] = rep.holder_values;
  out["holder_sup"] = rep.holder_sup;
  out["holder_cap"] = rep.holder_cap;
  out["holder_ok"] = rep.holder_ok;
  return out;
}

nlohmann::json results_sharpness(const nlohmann::json& params,
                                 std::optional<std::uint64_t> seed_override) {
  SharpnessConfig cfg;
  cfg.p = json_field_number(params, "p", "sharpness");
  cfg.alpha = json_field_number(params, "alpha", "sharpness");
  if (params.contains("N_values")) {
    std::vector<double> ns = json_number_array(params["N_values"], "sharpness.N_values");
    cfg.N_values.clear();
    for (double n : ns) cfg.N_values.push_back(static_cast<int>(n));
  }
  if (params.contains("grid_n"))
    cfg.grid_n = static_cast<int>(json_field_int(params, "grid_n", "sharpness"));
  if (params.contains("circumference"))
    cfg.circumference = json_number(params["circumference"], "sharpness.circumference");
  if (params.contains("kind")) {
    std::string s = params["kind"].is_string() ? params["kind"].get<std::string>() : "";
    if (s == "bessel")
      cfg.kind = FractionalKind::bessel;
    else if (s == "generator_power")
      cfg.kind = FractionalKind::generator_power;
    else
      throw ConfigError("sharpness.kind", "expected bessel | generator_power");
  }
  if (params.contains("bump"))
    cfg.bump = grid_from_json(params["bump"], "sharpness.bump");
  if (params.contains("seed")) {
    if (!params["seed"].is_number_integer() && !params["seed"].is_number_unsigned())
      throw ConfigError("sharpness.seed", "expected an integer");
    cfg.seed = params["seed"].get<std::uint64_t>();
  }
  if (seed_override) cfg.seed = *seed_override;

  SharpnessReport rep = sharpness_experiment(cfg);
  nlohmann::json out;
  out["slope"] = rep.slope;
  out["stderr_slope"] = rep.stderr_slope;
  out["expected_slope"] = rep.expected_slope;
  out["verdict"] = rep.r_bounded_consistent ? "r-bounded-consistent" : "unbounded";
  out["max_sign_dependence"] = rep.max_sign_dependence;
  nlohmann::json table;
  table["columns"] = {"N", "Q_N", "log_fit", "expected_slope", "verdict"};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.rows) {
    double logfit = rep.slope * std::log(static_cast<double>(row.N));
    rows.push_back({row.N, row.Q, logfit, rep.expected_slope,
                    rep.r_bounded_consistent ? "r-bounded-consistent" : "unbounded"});
  }
  table["rows"] = std::move(rows);
  out["table"] = std::move(table);
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds = {"rademacher", "rbound",   "type",      "cotype",
                                                 "lorentz",    "besov",    "integral",  "gamma",
                                                 "semigroup",  "sharpness"};
  return kinds;
}

nlohmann::json run_experiment(const std::string& kind, const nlohmann::json& params,
                              std::optional<std::uint64_t> seed_override) {
  if (!params.is_object()) throw ConfigError(kind, "parameters must be a JSON object");
  RandomConfig cfg = config_from_params(params, kind, seed_override);

  nlohmann::json results;
  if (kind == "rademacher")
    results = results_rademacher(params, cfg);
  else if (kind == "rbound")
    results = results_rbound(params, cfg);
  else if (kind == "type" || kind == "cotype")
    results = results_typecotype(kind, params, cfg);
  else if (kind == "lorentz")
    results = results_lorentz(params);
  else if (kind == "besov")
    results = results_besov(params);
  else if (kind == "integral")
    results = results_integral(params, cfg);
  else if (kind == "gamma")
    results = results_gamma(params, cfg);
  else if (kind == "semigroup")
    results = results_semigroup(params, cfg);
  else if (kind == "sharpness")
    results = results_sharpness(params, seed_override);
  else
    throw ConfigError("kind", "unknown experiment kind '" + kind + "'");

  nlohmann::json report;
  report["kind"] = kind;
  report["config"] = params;
  if (seed_override) report["config"]["seed"] = *seed_override;
  report["results"] = std::move(results);
  nlohmann::json prov;
  prov["version"] = "rbound-lab 0.1.0";
  prov["seed"] = cfg.seed;
  report["provenance"] = std::move(prov);
  return report;
}

}  // namespace rblab
