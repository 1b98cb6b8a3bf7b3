#pragma once

#include <cstdint>
#include <vector>

#include "rblab/measure.hpp"
#include "rblab/moments.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

struct TypeCotypeReport {
  NormedSpace space;
  double exponent = 2.0;
  int N = 0;
  double constant_lower = 0.0;
  std::vector<Vector> witness;
  double basis_probe_ratio = 0.0;  // ratio of the deterministic standard-basis probe
  std::int64_t ratio_evals = 0;
};

// Best found ratio (E||sum r_n x_n||^2)^{1/2} / (sum_n ||x_n||^p)^{1/p} over
// N-tuples: standard basis probe (always included), seeded random probes,
// coordinate ascent. p in [1, 2]. constant_lower is reproducible from the
// witness to 1e-12.
TypeCotypeReport type_constant_lower(const NormedSpace& space, double p, int N,
                                     const RandomConfig& cfg);

// Same search for (sum_n ||x_n||^q)^{1/q} / (E||sum r_n x_n||^2)^{1/2},
// q in [2, inf]; q = inf uses max_n ||x_n|| in the numerator.
TypeCotypeReport cotype_constant_lower(const NormedSpace& space, double q, int N,
                                       const RandomConfig& cfg);

// || sum_n r_n f_n x_n ||_{L^q(S; L^2(Omega; X))}: for each atom the inner
// L^2(Omega;X) norm is an exact Rademacher moment of the scaled vectors
// (f_n(s) x_n), then the outer weighted l^q sum over atoms. q = inf -> max.
double mixed_lq_rad_norm(const DiscreteMeasureSpace& S, const std::vector<StepFunction>& fns,
                         const std::vector<Vector>& xs, double q, const RandomConfig& cfg);

// int_0^inf max_n mu(|f_n| > t)^{1/q} dt, exact on step data (piecewise
// constant between the pooled distinct |values|).
double max_distribution_integral(const std::vector<StepFunction>& fns, double q);

// Disjoint normalized indicators f_n = mu(S_1)^{-1/q} 1_{S_n} on an
// equal-measure partition of n_sets atoms with the given atom weight.
std::vector<StepFunction> disjoint_indicator_system(int n_sets, double atom_weight, double q);

struct GrowthFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  double intercept = 0.0;
};

// Least-squares fit of log(values) against log(ns).
GrowthFit fit_loglog(const std::vector<double>& ns, const std::vector<double>& values);

}  // namespace rblab
