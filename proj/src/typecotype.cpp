#include "rblab/typecotype.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rblab/errors.hpp"
#include "rblab/parallel.hpp"
#include "rblab/random.hpp"

namespace rblab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (sum ||x_n||^e)^{1/e}, e = inf -> max
double power_sum_norm(const std::vector<Vector>& xs, double e) {
  if (e == kInf) {
    double m = 0.0;
    for (const auto& x : xs) m = std::max(m, vector_norm(x));
    return m;
  }
  double acc = 0.0;
  for (const auto& x : xs) acc += std::pow(vector_norm(x), e);
  return std::pow(acc, 1.0 / e);
}

struct RatioFn {
  const NormedSpace& space;
  double exponent;
  bool cotype;
  const RandomConfig& cfg;

  double operator()(const std::vector<std::vector<double>>& coords) const {
    std::vector<Vector> xs;
    xs.reserve(coords.size());
    for (const auto& c : coords) xs.push_back(Vector{space, c});
    double rad = rademacher_moment(xs, 2.0, cfg).value;
    double ps = power_sum_norm(xs, exponent);
    if (cotype) return (rad == 0.0) ? 0.0 : ps / rad;
    return (ps == 0.0) ? 0.0 : rad / ps;
  }
};

std::vector<double> random_unit_coords(int dim, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(dim));
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& c : v) {
      c = rng.normal();
      nrm += c * c;
    }
    nrm = std::sqrt(nrm);
  } while (nrm < 1e-12);
  for (double& c : v) c /= nrm;
  return v;
}

TypeCotypeReport search_constant(const NormedSpace& space, double exponent, int N, bool cotype,
                                 const RandomConfig& cfg) {
  if (N < 1) throw InvalidParameter("type/cotype: N must be >= 1");
  RatioFn ratio{space, exponent, cotype, cfg};

  TypeCotypeReport rep;
  rep.space = space;
  rep.exponent = exponent;
  rep.N = N;

  // deterministic standard-basis probe x_n = e_{(n-1) mod dim}
  std::vector<std::vector<double>> basis(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) basis[n] = basis_vector(space, n % space.dim).coords;
  rep.basis_probe_ratio = ratio(basis);
  rep.ratio_evals = 1;

  std::vector<std::vector<double>> best_coords = basis;
  double best = rep.basis_probe_ratio;

  const int restarts = cfg.restarts < 1 ? 1 : cfg.restarts;
  struct Result {
    double value;
    std::vector<std::vector<double>> coords;
    std::int64_t evals;
  };
  std::vector<Result> results(static_cast<std::size_t>(restarts));
  parallel_for(restarts, [&](int r) {
    Rng rng(derive_seed(cfg.seed, 0x7c7e0000u + static_cast<std::uint64_t>(r)));
    std::vector<std::vector<double>> coords(static_cast<std::size_t>(N));
    if (r == 0) {
      coords = basis;
    } else {
      for (int n = 0; n < N; ++n) coords[n] = random_unit_coords(space.dim, rng);
    }
    double cur = ratio(coords);
    std::int64_t evals = 1;
    std::vector<double> step(static_cast<std::size_t>(N), 0.1);
    for (int sweep = 0; sweep < 200; ++sweep) {
      bool improved = false;
      for (int n = 0; n < N; ++n) {
        double nrm = 0.0;
        for (double c : coords[n]) nrm += c * c;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) nrm = 1.0;
        bool ok = false;
        auto dir = random_unit_coords(space.dim, rng);
        auto trial = coords;
        for (int i = 0; i < space.dim; ++i) trial[n][i] = coords[n][i] + step[n] * nrm * dir[i];
        double v = ratio(trial);
        ++evals;
        if (v > cur) {
          cur = v;
          coords = trial;
          ok = true;
        }
        for (double fac : {1.0 + step[n], 1.0 / (1.0 + step[n])}) {
          auto t2 = coords;
          for (double& c : t2[n]) c *= fac;
          double v2 = ratio(t2);
          ++evals;
          if (v2 > cur) {
            cur = v2;
            coords = t2;
            ok = true;
          }
        }
        if (ok) {
          improved = true;
        } else {
          step[n] *= 0.5;
        }
      }
      if (!improved && *std::max_element(step.begin(), step.end()) < 1e-7) break;
    }
    results[static_cast<std::size_t>(r)] = Result{cur, coords, evals};
  });
  for (const auto& r : results) {
    rep.ratio_evals += r.evals;
    if (r.value > best) {
      best = r.value;
      best_coords = r.coords;
    }
  }
  rep.constant_lower = best;
  for (const auto& c : best_coords) rep.witness.push_back(Vector{space, c});
  return rep;
}

}  // namespace

TypeCotypeReport type_constant_lower(const NormedSpace& space, double p, int N,
                                     const RandomConfig& cfg) {
  if (!(p >= 1.0 && p <= 2.0)) throw InvalidParameter("type_constant_lower: p must lie in [1, 2]");
  return search_constant(space, p, N, false, cfg);
}

TypeCotypeReport cotype_constant_lower(const NormedSpace& space, double q, int N,
                                       const RandomConfig& cfg) {
  if (!(q >= 2.0)) throw InvalidParameter("cotype_constant_lower: q must lie in [2, inf]");
  return search_constant(space, q, N, true, cfg);
}

double mixed_lq_rad_norm(const DiscreteMeasureSpace& S, const std::vector<StepFunction>& fns,
                         const std::vector<Vector>& xs, double q, const RandomConfig& cfg) {
  if (fns.size() != xs.size()) throw DimensionError("mixed norm: f/x count mismatch");
  if (fns.empty()) throw DegenerateInput("mixed norm: empty system");
  if (!(q >= 1.0)) throw InvalidParameter("mixed norm: q must be >= 1");
  const int atoms = S.atoms();
  for (const auto& f : fns)
    if (static_cast<int>(f.values.size()) != atoms)
      throw DimensionError("mixed norm: step function does not live on S");
  const int n = static_cast<int>(xs.size());
  double acc = 0.0;
  double mx = 0.0;
  for (int s = 0; s < atoms; ++s) {
    std::vector<Vector> scaled;
    scaled.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      Vector v = xs[static_cast<std::size_t>(k)];
      for (double& c : v.coords) c *= fns[static_cast<std::size_t>(k)].values[static_cast<std::size_t>(s)];
      scaled.push_back(std::move(v));
    }
    double inner = rademacher_moment(scaled, 2.0, cfg).value;
    if (q == kInf) {
      mx = std::max(mx, inner);
    } else {
      acc += S.weights[static_cast<std::size_t>(s)] * std::pow(inner, q);
    }
  }
  return (q == kInf) ? mx : std::pow(acc, 1.0 / q);
}

double max_distribution_integral(const std::vector<StepFunction>& fns, double q) {
  if (fns.empty()) throw DegenerateInput("max_distribution_integral: empty system");
  if (!(q >= 1.0)) throw InvalidParameter("max_distribution_integral: q must be >= 1");
  // pooled distinct thresholds
  std::vector<double> thresholds{0.0};
  for (const auto& f : fns)
    for (double v : f.values) thresholds.push_back(std::fabs(v));
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  auto dist_at = [&](const StepFunction& f, double t) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
      if (std::fabs(f.values[i]) > t) m += f.space.weights[i];
    return m;
  };
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < thresholds.size(); ++j) {
    double lo = thresholds[j], hi = thresholds[j + 1];
    double mx = 0.0;
    for (const auto& f : fns) mx = std::max(mx, dist_at(f, lo));
    acc += (hi - lo) * std::pow(mx, 1.0 / q);
  }
  return acc;
}

std::vector<StepFunction> disjoint_indicator_system(int n_sets, double atom_weight, double q) {
  if (n_sets < 1) throw InvalidParameter("disjoint_indicator_system: need n_sets >= 1");
  if (!(atom_weight > 0.0)) throw InvalidParameter("disjoint_indicator_system: weight must be positive");
  if (!(q >= 1.0)) throw InvalidParameter("disjoint_indicator_system: q must be >= 1");
  DiscreteMeasureSpace S{std::vector<double>(static_cast<std::size_t>(n_sets), atom_weight)};
  double scale = std::pow(atom_weight, -1.0 / q);
  std::vector<StepFunction> fns;
  fns.reserve(static_cast<std::size_t>(n_sets));
  for (int n = 0; n < n_sets; ++n) {
    std::vector<double> vals(static_cast<std::size_t>(n_sets), 0.0);
    vals[static_cast<std::size_t>(n)] = scale;
    fns.push_back(StepFunction{S, std::move(vals)});
  }
  return fns;
}

GrowthFit fit_loglog(const std::vector<double>& ns, const std::vector<double>& values) {
  if (ns.size() != values.size() || ns.size() < 2)
    throw InvalidParameter("fit_loglog: need >= 2 matching points");
  const std::size_t m = ns.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(ns[i] > 0.0) || !(values[i] > 0.0))
      throw InvalidParameter("fit_loglog: points must be positive");
    lx[i] = std::log(ns[i]);
    ly[i] = std::log(values[i]);
    sx += lx[i];
    sy += ly[i];
  }
  double mx = sx / static_cast<double>(m), my = sy / static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  GrowthFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
  }
  // slope standard error; zero when the fit is exact or only two points
  if (m > 2 && sxx > 0.0) {
    fit.stderr_slope = std::sqrt(ss_res / (static_cast<double>(m) - 2.0) / sxx);
  }
  return fit;
}

}  // namespace rblab
