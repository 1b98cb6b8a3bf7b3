#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rblab/acceptance.hpp"
#include "rblab/errors.hpp"
#include "rblab/experiments.hpp"
#include "rblab/report.hpp"

namespace {

const char* kind_blurb(const std::string& kind) {
  if (kind == "rademacher") return "sign-sum moment of a vector system";
  if (kind == "rbound") return "R-bound lower estimate for an operator family";
  if (kind == "type") return "type constant lower estimate";
  if (kind == "cotype") return "cotype constant lower estimate";
  if (kind == "lorentz") return "Lorentz norm of a step function";
  if (kind == "besov") return "smoothness norm of a sampled function";
  if (kind == "integral") return "operator-step family against its L^1 cap";
  if (kind == "gamma") return "Gaussian-sum norm / multiplier inequality";
  if (kind == "semigroup") return "fractional-domain semigroup family experiment";
  if (kind == "sharpness") return "scaled-translate growth experiment";
  return "experiment";
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rblab::ConfigError(path, "cannot open config file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw rblab::ConfigError(path, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw rblab::ConfigError(out_path, "cannot open output file");
  out << text;
  if (!out) throw rblab::ConfigError(out_path, "write failed");
}

int run_verify_all(bool quick) {
  std::vector<rblab::CriterionResult> results = rblab::run_acceptance(quick, "");
  int passed = 0;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << "/" << results.size() << " "
              << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.details << "\n";
    if (r.passed) ++passed;
  }
  std::cout << "verify-all: " << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rbound-lab: sign-sum moments, R-bound estimates and smoothness norms on finite grids"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "json";
  std::uint64_t seed = 0;
  std::string run_kind;

  for (const std::string& kind : rblab::experiment_kinds()) {
    CLI::App* sub = app.add_subcommand(kind, kind_blurb(kind));
    sub->add_option("--config", config_path, "JSON parameter file")->required();
    sub->add_option("--seed", seed, "override the seed in the config");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->callback([&run_kind, kind] { run_kind = kind; });
  }

  bool quick = false;
  CLI::App* verify = app.add_subcommand("verify-all", "run every built-in verification criterion");
  verify->add_flag("--quick", quick, "reduced trial counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify_all(quick);

    nlohmann::json params = load_config(config_path);
    std::optional<std::uint64_t> seed_override;
    CLI::App* sub = app.get_subcommand(run_kind);
    if (sub->count("--seed") > 0) seed_override = seed;
    nlohmann::json report = rblab::run_experiment(run_kind, params, seed_override);
    if (format == "csv")
      emit(rblab::report_csv(report), out_path);
    else
      emit(rblab::canonical_json(report) + "\n", out_path);
    return 0;
  } catch (const rblab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
