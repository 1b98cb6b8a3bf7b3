#include "rblab/integral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rblab/errors.hpp"
#include "rblab/random.hpp"
#include "rblab/rbound.hpp"

namespace rblab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void OperatorValuedStep::validate() const {
  if (static_cast<int>(matrices.size()) != space.atoms())
    throw DimensionError("operator step: need one matrix per atom");
  if (matrices.empty()) throw DegenerateInput("operator step: empty space");
  for (const auto& m : matrices)
    if (m.rows != codomain.dim || m.cols != domain.dim)
      throw DimensionError("operator step: matrix shape does not match spaces");
}

Matrix apply_Tf(const OperatorValuedStep& T, const StepFunction& f) {
  T.validate();
  if (static_cast<int>(f.values.size()) != T.space.atoms() ||
      f.space.weights != T.space.weights)
    throw DimensionError("apply_Tf: f does not live on T's space");
  Matrix out{T.codomain.dim, T.domain.dim,
             std::vector<double>(static_cast<std::size_t>(T.codomain.dim * T.domain.dim), 0.0)};
  for (std::size_t i = 0; i < T.matrices.size(); ++i) {
    double c = T.space.weights[i] * f.values[i];
    if (c == 0.0) continue;
    out = mat_add(out, T.matrices[i], 1.0, c);
  }
  return out;
}

double atom_norm_upper(const OperatorValuedStep& T, int i) {
  const Matrix& m = T.matrices[static_cast<std::size_t>(i)];
  bool exact = (T.domain.is_hilbert() && T.codomain.is_hilbert()) ||
               (is_diagonal(m) && T.domain.exponent == T.codomain.exponent);
  if (exact) {
    OperatorFamily fam{T.domain, T.codomain, {m}};
    return uniform_norm_lower(fam, RandomConfig{});
  }
  return operator_norm_upper(m, T.domain, T.codomain);
}

double operator_step_lr_norm(const OperatorValuedStep& T, double r) {
  T.validate();
  if (!(r >= 1.0)) throw InvalidParameter("operator step L^r norm: r must be >= 1");
  if (r == kInf) {
    double mx = 0.0;
    for (int i = 0; i < T.space.atoms(); ++i) mx = std::max(mx, atom_norm_upper(T, i));
    return mx;
  }
  double acc = 0.0;
  for (int i = 0; i < T.space.atoms(); ++i)
    acc += T.space.weights[static_cast<std::size_t>(i)] * std::pow(atom_norm_upper(T, i), r);
  return std::pow(acc, 1.0 / r);
}

double integral_l1_cap(const OperatorValuedStep& T) {
  return 2.0 * operator_step_lr_norm(T, 1.0);
}

namespace {

// weighted L^p norm of a value list on T's measure space
double weighted_lp(const std::vector<double>& w, const std::vector<double>& v, double p) {
  if (p == kInf) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::fabs(x));
    return mx;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += w[i] * std::pow(std::fabs(v[i]), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

IntegralRboundReport verify_integral_rbound(const OperatorValuedStep& T, double r, int trials,
                                            const RandomConfig& cfg, int k) {
  T.validate();
  if (!(r >= 1.0)) throw InvalidParameter("verify_integral_rbound: r must be >= 1");
  if (trials < 1) throw InvalidParameter("verify_integral_rbound: trials must be >= 1");
  if (k < 0) throw InvalidParameter("verify_integral_rbound: k must be >= 0");
  const double rp = (r == 1.0) ? kInf : (r == kInf ? 1.0 : r / (r - 1.0));
  const int atoms = T.space.atoms();

  IntegralRboundReport rep;
  rep.trials = trials;
  rep.family_size = k + atoms;
  rep.seed = cfg.seed;
  rep.r = r;
  rep.t_lr_norm = operator_step_lr_norm(T, r);
  if (rep.t_lr_norm == 0.0) {
    // T identically zero: every T_f vanishes
    rep.trial_ratios.assign(static_cast<std::size_t>(trials), 0.0);
    return rep;
  }

  double sum = 0.0;
  for (int m = 0; m < trials; ++m) {
    Rng rng(derive_seed(cfg.seed, 0x16E70000u + static_cast<std::uint64_t>(m)));
    std::vector<StepFunction> fs;
    fs.reserve(static_cast<std::size_t>(k + atoms));
    for (int j = 0; j < k; ++j) {
      std::vector<double> vals(static_cast<std::size_t>(atoms));
      for (double& x : vals) x = rng.normal();
      double nrm = weighted_lp(T.space.weights, vals, rp);
      if (nrm < 1e-12) {
        vals.assign(static_cast<std::size_t>(atoms), 0.0);
        vals[0] = 1.0;
        nrm = weighted_lp(T.space.weights, vals, rp);
      }
      for (double& x : vals) x /= nrm;
      fs.push_back(StepFunction{T.space, std::move(vals)});
    }
    // coordinate indicators, normalized into the same unit ball
    for (int i = 0; i < atoms; ++i) {
      std::vector<double> vals(static_cast<std::size_t>(atoms), 0.0);
      vals[static_cast<std::size_t>(i)] = 1.0;
      double nrm = weighted_lp(T.space.weights, vals, rp);
      vals[static_cast<std::size_t>(i)] = 1.0 / nrm;
      fs.push_back(StepFunction{T.space, std::move(vals)});
    }
    OperatorFamily fam{T.domain, T.codomain, {}};
    fam.operators.reserve(fs.size());
    for (const auto& f : fs) fam.operators.push_back(apply_Tf(T, f));
    RandomConfig trial_cfg = cfg;
    trial_cfg.seed = derive_seed(cfg.seed, 0x1E5B0000u + static_cast<std::uint64_t>(m));
    RBoundEstimate est = rbound_lower(fam, static_cast<int>(fam.operators.size()), trial_cfg,
                                      SearchStrategy::random);
    double ratio = est.lower_bound / rep.t_lr_norm;
    rep.trial_ratios.push_back(ratio);
    rep.empirical_C_max = std::max(rep.empirical_C_max, ratio);
    sum += ratio;
  }
  rep.empirical_C_mean = sum / trials;
  return rep;
}

void EquidistributionBall::validate() const {
  if (reference.values.empty()) throw DegenerateInput("equidistribution: empty reference");
  const auto& w = reference.space.weights;
  for (double wi : w)
    if (wi != w.front())
      throw InvalidParameter("equidistribution: unsupported on unequal atom weights");
}

std::vector<StepFunction> sample_equidistributed(const EquidistributionBall& ball, int k,
                                                 const RandomConfig& cfg) {
  ball.validate();
  if (k < 1) throw InvalidParameter("sample_equidistributed: k must be >= 1");
  const int n = static_cast<int>(ball.reference.values.size());
  std::vector<StepFunction> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    Rng rng(derive_seed(cfg.seed, 0xE01D0000u + static_cast<std::uint64_t>(j)));
    std::vector<double> vals = ball.reference.values;
    for (int i = n - 1; i > 0; --i) {
      auto pick = static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
      std::swap(vals[static_cast<std::size_t>(i)], vals[pick]);
    }
    for (double& v : vals) v *= rng.sign();
    out.push_back(StepFunction{ball.reference.space, std::move(vals)});
  }
  return out;
}

double diag_counterexample_ratio(const std::vector<double>& t, const std::vector<double>& alpha,
                                 double q) {
  if (t.size() != alpha.size()) throw DimensionError("diag ratio: length mismatch");
  if (t.empty()) throw DegenerateInput("diag ratio: empty input");
  if (!(q > 2.0)) throw InvalidParameter("diag ratio: q must exceed 2");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    num += t[i] * t[i] * alpha[i] * alpha[i];
    den += std::pow(std::fabs(alpha[i]), q);
  }
  if (den == 0.0) throw DegenerateInput("diag ratio: alpha is zero");
  return std::sqrt(num) / std::pow(den, 1.0 / q);
}

double diag_counterexample_ratio_generic(const std::vector<double>& t,
                                         const std::vector<double>& alpha, double q,
                                         const RandomConfig& cfg) {
  if (t.size() != alpha.size()) throw DimensionError("diag ratio: length mismatch");
  if (t.empty()) throw DegenerateInput("diag ratio: empty input");
  if (!(q > 2.0)) throw InvalidParameter("diag ratio: q must exceed 2");
  const int d = static_cast<int>(t.size());
  OperatorValuedStep T;
  T.space = DiscreteMeasureSpace::uniform(d, static_cast<double>(d));  // counting measure
  T.domain = NormedSpace::lp(d, q);
  T.codomain = NormedSpace::lp(1, 2.0);
  for (int i = 0; i < d; ++i) {
    Matrix row{1, d, std::vector<double>(static_cast<std::size_t>(d), 0.0)};
    row.a[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
    T.matrices.push_back(std::move(row));
  }
  OperatorFamily fam{T.domain, T.codomain, {}};
  Assignment asg;
  for (int i = 0; i < d; ++i) {
    std::vector<double> ei(static_cast<std::size_t>(d), 0.0);
    ei[static_cast<std::size_t>(i)] = 1.0;
    StepFunction f{T.space, ei};
    fam.operators.push_back(apply_Tf(T, f));
    asg.operator_indices.push_back(i);
    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    x[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)];
    asg.vectors.push_back(Vector{T.domain, std::move(x)});
  }
  return rbound_ratio(fam, asg, cfg);
}

double diag_family_cap(const std::vector<double>& t, double q) {
  if (!(q > 2.0)) throw InvalidParameter("diag cap: q must exceed 2");
  double v = 2.0 * q / (q - 2.0);
  double acc = 0.0;
  for (double ti : t) acc += std::pow(std::fabs(ti), v);
  return std::pow(acc, 1.0 / v);
}

}  // namespace rblab
