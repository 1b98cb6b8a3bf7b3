#pragma once

#include <vector>

#include "rblab/linalg.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

// Smoothness norms built from the translation modulus of continuity on
// uniformly sampled functions.

enum class ValueKind { scalar, vector, matrix };

// Uniform samples of a function on (a, b): value i is the sample at the cell
// midpoint a + (i + 1/2) * (b - a) / n.  Values are scalars, vectors in a
// common normed space, or matrices measured as operators domain -> codomain.
struct GridFunction {
  double a = 0.0;
  double b = 1.0;
  ValueKind kind = ValueKind::scalar;
  std::vector<double> scalars;
  std::vector<Vector> vectors;
  std::vector<Matrix> matrices;
  // matrix kind only
  NormedSpace domain;
  NormedSpace codomain;
  // matrix kind: refuse the search-based operator-norm estimate and insist on
  // an exactly computable case (Hilbert or diagonal-with-equal-exponents)
  bool exact_norms = false;

  int n() const;
  double step() const { return (b - a) / n(); }
  double sample_point(int i) const { return a + (i + 0.5) * step(); }
  void validate() const;
};

GridFunction make_scalar_grid(double a, double b, std::vector<double> values);
GridFunction make_vector_grid(double a, double b, std::vector<Vector> values);
GridFunction make_operator_grid(double a, double b, std::vector<Matrix> values,
                                const NormedSpace& domain, const NormedSpace& codomain);

// Sample a scalar callable at the n cell midpoints of (a, b).
template <class F>
GridFunction sample_scalar(double a, double b, int n, F&& f) {
  std::vector<double> v(static_cast<std::size_t>(n));
  double h = (b - a) / n;
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = f(a + (i + 0.5) * h);
  return make_scalar_grid(a, b, std::move(v));
}

// ||value_i|| in the declared value space.
double grid_value_norm(const GridFunction& f, int i);
// ||value_j - value_i||.
double grid_diff_norm(const GridFunction& f, int i, int j);
// (integral over (a,b) of ||f||^p)^{1/p}; p = inf -> max over samples.
double grid_lp_norm(const GridFunction& f, double p);

enum class ModulusConvention { restrict, zero_extend };

// sup over grid shifts h = k*step, 0 < |h| <= t, of the L^p norm of
// f(. + h) - f(.).  restrict integrates over {r : r and r + h both in (a,b)};
// zero_extend reads f as 0 outside (a,b) and integrates over (a,b).
// t below one grid step returns the one-step value.
double modulus_rho(const GridFunction& f, double t, double p, ModulusConvention convention);

struct BesovParams {
  double s = 0.5;   // in (0,1)
  double p = 2.0;   // [1, inf]
  double q = 1.0;   // [1, inf]
  ModulusConvention convention = ModulusConvention::restrict;
  int levels = 12;  // dyadic levels j = 0..levels
  void validate() const;
};

// ||f||_{L^p} + (sum_{j=0..J} (2^{js} rho_p(f, 2^{-j}))^q ln 2)^{1/q};
// q = inf takes the sup over levels instead.
double lambda_besov_norm(const GridFunction& f, const BesovParams& params);

struct HolderViolation {
  double s = 0.0;          // base point
  double h = 0.0;          // shift
  double difference = 0.0; // ||f(s+h) - f(s)||
  double allowed = 0.0;    // A |h|^alpha
};

struct HolderReport {
  double alpha = 0.0;
  double r = 2.0;
  double A = 0.0;
  bool holds = false;
  std::vector<HolderViolation> violations;  // capped at 16 worst offenders
  double besov_norm = 0.0;   // Lambda^{1/r}_{r,1}, restrict convention
  double lr_norm = 0.0;      // ||f||_{L^r}
  double bound_ratio = 0.0;  // besov_norm / (A + lr_norm)
};

// Checks ||f(s+h) - f(s)|| <= A |h|^alpha over all grid pairs on the bounded
// interval, then reports the Lambda^{1/r}_{r,1} norm alongside A + ||f||_{L^r}
// so the ratio can be tracked across refinements.  Requires alpha in (1/r, 1).
HolderReport holder_hypothesis_check(const GridFunction& f, double alpha, double r, double A);

}  // namespace rblab
