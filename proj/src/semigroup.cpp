#include "rblab/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "rblab/errors.hpp"
#include "rblab/fft.hpp"

namespace rblab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

double abs_pow(double x, double p) {
  double a = std::fabs(x);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  return std::pow(a, p);
}
}  // namespace

void DiagonalSemigroup::validate() const {
  if (rates.empty()) throw DegenerateInput("diagonal semigroup: no rates");
  if (static_cast<int>(rates.size()) != space.dim)
    throw DimensionError("diagonal semigroup: rates/space dimension mismatch");
  for (double r : rates)
    if (!(r > 0.0)) throw InvalidParameter("diagonal semigroup: rates must be positive");
  if (!(space.exponent >= 1.0)) throw InvalidParameter("diagonal semigroup: exponent must be >= 1");
}

void TranslationGroup::validate() const {
  if (!(circumference > 0.0)) throw InvalidParameter("translation group: circumference must be positive");
  if (n < 2 || (n & (n - 1)) != 0)
    throw InvalidParameter("translation group: n must be a power of two >= 2");
  if (!(p >= 1.0) || p == kInf)
    throw InvalidParameter("translation group: p must lie in [1, inf)");
}

NormedSpace TranslationGroup::space() const {
  validate();
  return NormedSpace::weighted_lp(n, p, std::vector<double>(static_cast<std::size_t>(n), step()));
}

Vector semigroup_apply(const DiagonalSemigroup& g, double t, const Vector& x) {
  g.validate();
  if (t < 0.0) throw InvalidParameter("diagonal semigroup: t must be nonnegative");
  if (static_cast<int>(x.coords.size()) != g.space.dim)
    throw DimensionError("diagonal semigroup: vector dimension mismatch");
  Vector out{g.space, x.coords};
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] *= std::exp(-g.rates[k] * t);
  return out;
}

Vector semigroup_apply(const TranslationGroup& g, double t, const Vector& x) {
  g.validate();
  if (static_cast<int>(x.coords.size()) != g.n)
    throw DimensionError("translation group: vector dimension mismatch");
  long long k = std::llround(t / g.step());
  long long m = ((k % g.n) + g.n) % g.n;
  Vector out{g.space(), std::vector<double>(static_cast<std::size_t>(g.n))};
  for (int i = 0; i < g.n; ++i)
    out.coords[static_cast<std::size_t>(i)] =
        x.coords[static_cast<std::size_t>((i + m) % g.n)];
  return out;
}

Vector fractional_power_apply(const DiagonalSemigroup& g, double alpha, const Vector& x) {
  g.validate();
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidParameter("fractional power: alpha must lie in (0, 1]");
  if (static_cast<int>(x.coords.size()) != g.space.dim)
    throw DimensionError("fractional power: vector dimension mismatch");
  Vector out{g.space, x.coords};
  for (std::size_t k = 0; k < out.coords.size(); ++k)
    out.coords[k] *= std::pow(g.rates[k], alpha);
  return out;
}

Vector fractional_power_apply(const TranslationGroup& g, double alpha, const Vector& x,
                              FractionalKind kind) {
  g.validate();
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidParameter("fractional power: alpha must lie in (0, 1]");
  if (static_cast<int>(x.coords.size()) != g.n)
    throw DimensionError("fractional power: vector dimension mismatch");
  std::vector<double> symbol(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) {
    double xi = kTwoPi * static_cast<double>(fft_signed_index(j, g.n)) / g.circumference;
    symbol[static_cast<std::size_t>(j)] = (kind == FractionalKind::bessel)
                                              ? std::pow(1.0 + xi * xi, 0.5 * alpha)
                                              : std::pow(std::fabs(xi), alpha);
  }
  return Vector{g.space(), apply_fourier_multiplier(x.coords, g.circumference, symbol)};
}

double graph_d_norm(const DiagonalSemigroup& g, double alpha, const Vector& x) {
  if (g.space.exponent == kInf)
    throw InvalidParameter("graph norm: exponent must be finite");
  double base = vector_norm(Vector{g.space, x.coords});
  double frac = vector_norm(fractional_power_apply(g, alpha, x));
  double p = g.space.exponent;
  return std::pow(std::pow(base, p) + std::pow(frac, p), 1.0 / p);
}

double graph_d_norm(const TranslationGroup& g, double alpha, const Vector& x,
                    FractionalKind kind) {
  double base = vector_norm(Vector{g.space(), x.coords});
  double frac = vector_norm(fractional_power_apply(g, alpha, x, kind));
  return std::pow(std::pow(base, g.p) + std::pow(frac, g.p), 1.0 / g.p);
}

NormedSpace fractional_domain_space(const DiagonalSemigroup& g, double alpha) {
  g.validate();
  if (g.space.exponent == kInf)
    throw InvalidParameter("fractional domain: exponent must be finite");
  double pe = g.space.exponent;
  std::vector<double> w(static_cast<std::size_t>(g.space.dim));
  for (std::size_t k = 0; k < w.size(); ++k) {
    double base = g.space.weights.empty() ? 1.0 : g.space.weights[k];
    w[k] = base * (1.0 + std::pow(g.rates[k], alpha * pe));
  }
  return NormedSpace::weighted_lp(g.space.dim, pe, std::move(w));
}

double embedding_norm(const DiagonalSemigroup& g, double alpha) {
  g.validate();
  if (g.space.exponent == kInf)
    throw InvalidParameter("embedding norm: exponent must be finite");
  double pe = g.space.exponent;
  double best = 0.0;
  for (double lam : g.rates)
    best = std::max(best, std::pow(1.0 + std::pow(lam, alpha * pe), -1.0 / pe));
  return best;
}

double holder_rate_constant(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidParameter("holder constant: alpha must lie in (0, 1]");
  auto h = [alpha](double logu) {
    double u = std::exp(logu);
    // -expm1 keeps 1 - e^{-u} accurate when u is tiny
    return -std::expm1(-u) * std::pow(u, -alpha);
  };
  // coarse scan, then golden-section refinement around the best point
  double best_x = 0.0, best = -1.0;
  for (int i = 0; i <= 1200; ++i) {
    double x = -30.0 + i * 0.05;
    double v = h(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double lo = best_x - 0.05, hi = best_x + 0.05;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 200; ++it) {
    if (h(c) < h(d))
      lo = c;
    else
      hi = d;
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  return h(0.5 * (lo + hi));
}

SemigroupExperimentReport thm_semigroup_experiment(const DiagonalSemigroup& g, double alpha,
                                                   double p, double q, int N,
                                                   const std::vector<double>& times,
                                                   const RandomConfig& cfg) {
  g.validate();
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidParameter("semigroup experiment: alpha must lie in (0, 1]");
  if (!(p >= 1.0) || !(q >= 1.0))
    throw InvalidParameter("semigroup experiment: exponents must be >= 1");
  if (!(alpha > 1.0 / p - 1.0 / q))
    throw InvalidParameter("semigroup experiment: need alpha > 1/p - 1/q");
  if (times.empty()) throw DegenerateInput("semigroup experiment: no times");
  for (double t : times)
    if (t < 0.0) throw InvalidParameter("semigroup experiment: times must be nonnegative");

  const int dim = g.space.dim;
  const double pe = g.space.exponent;
  SemigroupExperimentReport rep;
  rep.embedding = embedding_norm(g, alpha);

  OperatorFamily fam{fractional_domain_space(g, alpha), g.space, {}};
  fam.operators.reserve(times.size());
  for (double t : times) {
    std::vector<double> diag(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k)
      diag[static_cast<std::size_t>(k)] = std::exp(-g.rates[static_cast<std::size_t>(k)] * t);
    fam.operators.push_back(Matrix::diagonal(diag));
  }
  rep.estimate = rbound_lower(fam, N, cfg);
  rep.normalized_lower = rep.estimate.lower_bound / rep.embedding;

  rep.holder_cap = holder_rate_constant(alpha);
  for (double t : times) {
    if (t <= 0.0) continue;
    double norm = 0.0;
    for (double lam : g.rates) {
      double v = (1.0 - std::exp(-lam * t)) * std::pow(1.0 + std::pow(lam, alpha * pe), -1.0 / pe);
      norm = std::max(norm, v);
    }
    rep.holder_values.push_back(std::pow(t, -alpha) * norm);
  }
  for (double v : rep.holder_values) rep.holder_sup = std::max(rep.holder_sup, v);
  rep.holder_ok = rep.holder_sup <= rep.holder_cap + 1e-9;
  return rep;
}

double default_bump(double t) {
  if (!(t > 0.0 && t < 1.0)) return 0.0;
  return std::exp(-1.0 / (t * (1.0 - t)));
}

GridFunction default_bump_profile(int samples) {
  return sample_scalar(0.0, 1.0, samples, default_bump);
}

namespace {

// piecewise-linear read of a scalar profile on (0,1); zero at and outside the
// boundary
double bump_eval(const GridFunction& bump, double t) {
  if (!(t > 0.0 && t < 1.0)) return 0.0;
  const int m = bump.n();
  const double h = 1.0 / m;
  double u = t / h - 0.5;  // sample j sits at u = j
  if (u <= -0.5 || u >= m - 0.5) return 0.0;
  if (u < 0.0) {
    // between the left boundary (value 0) and sample 0
    return bump.scalars[0] * (u + 0.5) / 0.5;
  }
  if (u > m - 1.0) {
    return bump.scalars[static_cast<std::size_t>(m - 1)] * (m - 0.5 - u) / 0.5;
  }
  int j = static_cast<int>(std::floor(u));
  double frac = u - j;
  return bump.scalars[static_cast<std::size_t>(j)] * (1.0 - frac) +
         bump.scalars[static_cast<std::size_t>(j + 1)] * frac;
}

}  // namespace

SharpnessReport sharpness_experiment(const SharpnessConfig& cfg) {
  GridFunction bump = (cfg.bump.n() > 0) ? cfg.bump : default_bump_profile();
  bump.validate();
  if (bump.kind != ValueKind::scalar)
    throw InvalidParameter("sharpness: bump profile must be scalar");
  if (bump.a != 0.0 || bump.b != 1.0)
    throw InvalidParameter("sharpness: bump profile must live on (0, 1)");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw InvalidParameter("sharpness: alpha must lie in (0, 1)");
  if (!(cfg.p >= 1.0) || cfg.p == kInf)
    throw InvalidParameter("sharpness: p must lie in [1, inf)");
  if (!(cfg.circumference >= 2.0))
    throw InvalidParameter("sharpness: circumference must be >= 2 to keep translates disjoint");
  if (cfg.N_values.size() < 2)
    throw InvalidParameter("sharpness: need at least two N values for a slope");

  TranslationGroup group{cfg.circumference, cfg.grid_n, cfg.p};
  group.validate();
  const double delta = group.step();

  SharpnessReport rep;
  for (int N : cfg.N_values) {
    if (N < 1 || N > 20)
      throw InvalidParameter("sharpness: N must lie in [1, 20] for exact enumeration");
    double cells = 1.0 / (static_cast<double>(N) * delta);
    long long shift = std::llround(cells);
    if (std::fabs(cells - static_cast<double>(shift)) > 1e-9 || shift < 1)
      throw InvalidParameter("sharpness: translate n/N does not land on the grid");

    // psi_N(s) = psi(N s), support (0, 1/N) = cells [0, shift)
    std::vector<double> v(static_cast<std::size_t>(shift));
    for (long long i = 0; i < shift; ++i)
      v[static_cast<std::size_t>(i)] = bump_eval(bump, static_cast<double>(N) * i * delta);

    // per-translate contribution to ||sum eps_n T(n/N) psi_N||_p^p, recomputed
    // honestly with the live sign on every Gray flip
    auto contribution = [&](double eps) {
      double acc = 0.0;
      for (double x : v) acc += abs_pow(eps * x, cfg.p);
      return acc * delta;
    };
    std::vector<double> eps(static_cast<std::size_t>(N), 1.0);
    std::vector<double> contrib(static_cast<std::size_t>(N));
    double total = 0.0;
    for (int b = 0; b < N; ++b) {
      contrib[static_cast<std::size_t>(b)] = contribution(1.0);
      total += contrib[static_cast<std::size_t>(b)];
    }
    const double ref_norm = std::pow(total, 1.0 / cfg.p);
    double mean_sq = 0.0;
    double worst = 0.0;
    double scalar_sum = static_cast<double>(N);  // sum of signs
    double mean_scalar_sq = 0.0;
    const std::uint64_t patterns = 1ull << N;
    for (std::uint64_t step = 0; step < patterns; ++step) {
      if (step > 0) {
        int b = std::countr_zero(step);
        auto bi = static_cast<std::size_t>(b);
        eps[bi] = -eps[bi];
        total -= contrib[bi];
        contrib[bi] = contribution(eps[bi]);
        total += contrib[bi];
        scalar_sum += 2.0 * eps[bi];
      }
      double norm = std::pow(total, 1.0 / cfg.p);
      mean_sq += norm * norm;
      mean_scalar_sq += scalar_sum * scalar_sum;
      if (ref_norm > 0.0) worst = std::max(worst, std::fabs(norm - ref_norm) / ref_norm);
    }
    mean_sq /= static_cast<double>(patterns);
    mean_scalar_sq /= static_cast<double>(patterns);
    rep.max_sign_dependence = std::max(rep.max_sign_dependence, worst);

    // full-grid copy of psi_N for the graph norm
    std::vector<double> full(static_cast<std::size_t>(cfg.grid_n), 0.0);
    std::copy(v.begin(), v.end(), full.begin());
    double d_norm = graph_d_norm(group, cfg.alpha, Vector{group.space(), full}, cfg.kind);

    SharpnessRow row;
    row.N = N;
    row.numerator = std::sqrt(mean_sq);
    row.denominator = std::sqrt(mean_scalar_sq) * d_norm;  // = sqrt(N) ||psi_N||_D
    row.Q = row.numerator / row.denominator;
    double acc = 0.0;
    for (double x : v) acc += abs_pow(x, cfg.p);
    row.psi_coarse_lp = std::pow(acc * (static_cast<double>(N) * delta), 1.0 / cfg.p);
    rep.rows.push_back(row);
  }

  std::vector<double> ns, qs;
  for (const auto& row : rep.rows) {
    ns.push_back(static_cast<double>(row.N));
    qs.push_back(row.Q);
  }
  GrowthFit fit = fit_loglog(ns, qs);
  rep.slope = fit.slope;
  rep.stderr_slope = fit.stderr_slope;
  rep.expected_slope = 1.0 / cfg.p - 0.5 - cfg.alpha;
  rep.r_bounded_consistent = rep.slope <= 0.0;
  return rep;
}

}  // namespace rblab
