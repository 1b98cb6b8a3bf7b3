#pragma once

#include <cstdint>
#include <vector>

#include "rblab/linalg.hpp"
#include "rblab/measure.hpp"
#include "rblab/moments.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

// Operator-valued step function T on a discrete measure space: one matrix per
// atom, all acting domain -> codomain.
struct OperatorValuedStep {
  DiscreteMeasureSpace space;
  NormedSpace domain;
  NormedSpace codomain;
  std::vector<Matrix> matrices;

  void validate() const;
};

// T_f = sum_i w_i f_i M_i (the f-weighted integral of T).
Matrix apply_Tf(const OperatorValuedStep& T, const StepFunction& f);

// Per-atom operator norm, exact when computable exactly (Hilbert or diagonal
// with equal exponents), otherwise the Hoelder upper bound — always a sound
// upper estimate for cap computations.
double atom_norm_upper(const OperatorValuedStep& T, int i);

// (sum_i w_i ||M_i||^r)^{1/r}, per-atom norms as in atom_norm_upper.
// r = inf -> max_i ||M_i||.
double operator_step_lr_norm(const OperatorValuedStep& T, double r);

// 2 * integral of ||T(s)|| ds: a sound cap for the R-bound lower estimates of
// the family {T_f : ||f||_inf <= 1}.
double integral_l1_cap(const OperatorValuedStep& T);

struct IntegralRboundReport {
  double empirical_C_max = 0.0;
  double empirical_C_mean = 0.0;
  int trials = 0;
  int family_size = 0;  // functions per trial: K sampled + one indicator per atom
  std::uint64_t seed = 0;
  double r = 0.0;
  double t_lr_norm = 0.0;  // ||T||_{L^r(S)} denominator
  std::vector<double> trial_ratios;
};

// Samples trial sub-families {T_{f_1}, ..., T_{f_K}} with each f drawn from
// the unit ball of L^{r'}(S) (Gaussian magnitudes normalized, plus the
// normalized coordinate indicators), estimates the R-bound lower bound per
// trial, and reports the ratio to ||T||_{L^r(S)}.
IntegralRboundReport verify_integral_rbound(const OperatorValuedStep& T, double r, int trials,
                                            const RandomConfig& cfg, int k = 8);

// Signed-permutation orbit of a reference step function on an equal-weight
// space: every sample has exactly the distribution function of the reference.
struct EquidistributionBall {
  StepFunction reference;
  void validate() const;  // equal atom weights required
};

std::vector<StepFunction> sample_equidistributed(const EquidistributionBall& ball, int k,
                                                 const RandomConfig& cfg);

// Diagonal functional family on l^q (q > 2): the R-boundedness ratio
// ||t . alpha||_{l^2} / ||alpha||_{l^q} in closed form.
double diag_counterexample_ratio(const std::vector<double>& t, const std::vector<double>& alpha,
                                 double q);

// Same ratio through the generic pipeline: diagonal operator step on counting
// measure, f_i = e_i, x_i = alpha_i e_i, exact sign enumeration.  Agrees with
// the closed form to 1e-10.
double diag_counterexample_ratio_generic(const std::vector<double>& t,
                                         const std::vector<double>& alpha, double q,
                                         const RandomConfig& cfg);

// ||t||_{l^v} with 1/v = 1/2 - 1/q: dominates the ratio above for every
// assignment alpha (Hoelder).
double diag_family_cap(const std::vector<double>& t, double q);

}  // namespace rblab
