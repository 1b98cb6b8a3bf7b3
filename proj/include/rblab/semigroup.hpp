#pragma once

#include <cstdint>
#include <vector>

#include "rblab/besov.hpp"
#include "rblab/moments.hpp"
#include "rblab/rbound.hpp"
#include "rblab/spaces.hpp"
#include "rblab/typecotype.hpp"

namespace rblab {

// Diagonal contraction semigroup T(t) = diag(e^{-lambda_k t}) on an l^p of
// the same coordinates. All rates positive.
struct DiagonalSemigroup {
  std::vector<double> rates;
  NormedSpace space;
  void validate() const;
};

// Left-translation group on a periodic grid: n equally spaced samples
// s_i = i * circumference / n of a function on a circle.  The ambient norm is
// the weighted l^p with every weight equal to the grid step.
struct TranslationGroup {
  double circumference = 2.0;
  int n = 1 << 14;  // power of two (discrete Fourier transform)
  double p = 1.0;   // [1, inf)

  void validate() const;
  double step() const { return circumference / n; }
  double sample_point(int i) const { return i * step(); }
  NormedSpace space() const;
};

// T(t)x. Diagonal: coordinate-wise e^{-lambda_k t}, t >= 0 only.
// Translation: (T(t)f)(s) = f(s + t), t rounded to the nearest grid offset.
Vector semigroup_apply(const DiagonalSemigroup& g, double t, const Vector& x);
Vector semigroup_apply(const TranslationGroup& g, double t, const Vector& x);

// Fourier symbol used for the fractional power on the circle:
//   bessel          (1 + xi^2)^{alpha/2}   (inhomogeneous; defines H^{alpha,p})
//   generator_power  |xi|^alpha            (homogeneous; satisfies the exact
//                                           dilation scaling law)
enum class FractionalKind { bessel, generator_power };

// Diagonal: coordinate-wise lambda_k^alpha. alpha in (0, 1].
Vector fractional_power_apply(const DiagonalSemigroup& g, double alpha, const Vector& x);
// Translation: Fourier multiplier of the chosen kind.
Vector fractional_power_apply(const TranslationGroup& g, double alpha, const Vector& x,
                              FractionalKind kind = FractionalKind::bessel);

// Graph norm (||x||_p^p + ||D_alpha x||_p^p)^{1/p} with the space's own
// exponent p (finite only).
double graph_d_norm(const DiagonalSemigroup& g, double alpha, const Vector& x);
double graph_d_norm(const TranslationGroup& g, double alpha, const Vector& x,
                    FractionalKind kind = FractionalKind::bessel);

// The graph norm above as a weighted l^p space: weights w_k (1 + lambda_k^{alpha p}).
NormedSpace fractional_domain_space(const DiagonalSemigroup& g, double alpha);

// Exact norm of the inclusion D((-A)^alpha) -> X: max_k (1 + lambda_k^{alpha p})^{-1/p}.
double embedding_norm(const DiagonalSemigroup& g, double alpha);

// sup_{u>0} u^{-alpha} (1 - e^{-u}): the rate-independent constant in
// ||T(t) i_alpha - i_alpha|| <= c t^alpha.
double holder_rate_constant(double alpha);

struct SemigroupExperimentReport {
  double embedding = 0.0;         // ||i_alpha||
  RBoundEstimate estimate;        // for the family {T(t) i_alpha : t in times}
  double normalized_lower = 0.0;  // estimate.lower_bound / embedding
  std::vector<double> holder_values;  // t^{-alpha} ||T(t) i_alpha - i_alpha||, t > 0
  double holder_sup = 0.0;
  double holder_cap = 0.0;  // holder_rate_constant(alpha)
  bool holder_ok = false;   // holder_sup <= holder_cap + 1e-9
};

// R-bound lower estimate for {T(t) i_alpha : t in times} measured from the
// fractional-domain unit ball into X, normalized by the embedding norm, plus
// the t^alpha Hoelder certificate across the positive times.  The exponents
// p and q only set the smoothness threshold alpha > 1/p - 1/q; all norms use
// the space's own exponent.  N is the number of Rademacher summands used by
// the search.
SemigroupExperimentReport thm_semigroup_experiment(const DiagonalSemigroup& g, double alpha,
                                                   double p, double q, int N,
                                                   const std::vector<double>& times,
                                                   const RandomConfig& cfg);

// smooth bump exp(-1/(t(1-t))) on (0,1), zero outside
double default_bump(double t);
GridFunction default_bump_profile(int samples = 1 << 16);

struct SharpnessConfig {
  double p = 1.0;
  double alpha = 0.25;
  GridFunction bump;  // scalar profile on (0,1); use default_bump_profile()
  std::vector<int> N_values{4, 8, 16};
  std::uint64_t seed = 24601;
  int grid_n = 1 << 14;
  double circumference = 2.0;
  FractionalKind kind = FractionalKind::bessel;
};

struct SharpnessRow {
  int N = 0;
  double Q = 0.0;            // numerator / denominator
  double numerator = 0.0;    // (E||sum r_n T(n/N) i f_n||_p^2)^{1/2}, exact
  double denominator = 0.0;  // (E||sum r_n f_n||_D^2)^{1/2}, exact
  double psi_coarse_lp = 0.0;  // ||psi||_p on the N-coarsened grid; equals numerator
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;
  double slope = 0.0;
  double stderr_slope = 0.0;
  double expected_slope = 0.0;  // 1/p - 1/2 - alpha
  bool r_bounded_consistent = false;  // slope <= 0
  double max_sign_dependence = 0.0;   // worst relative numerator spread over patterns
};

// Scaled-bump translate experiment: f_n = psi_N (support (0, 1/N)) hit with
// T(n/N), n = 0..N-1.  Disjoint supports make the numerator the same for
// every sign pattern; that is asserted across the full enumeration, not
// assumed.  Exact enumeration only (every N <= 20); each translate must land
// on a whole number of grid cells.
SharpnessReport sharpness_experiment(const SharpnessConfig& cfg);

}  // namespace rblab
