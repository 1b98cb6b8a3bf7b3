#pragma once

#include <vector>

#include "rblab/linalg.hpp"
#include "rblab/moments.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

// Operator from a coordinate-Euclidean space H = R^{h_dim} into a normed
// codomain, measured in the Gaussian-sum norm (E||sum_k g_k Psi e_k||^2)^{1/2}.
struct GammaOperator {
  Matrix matrix;  // codomain.dim x h_dim
  NormedSpace codomain;
  int h_dim = 0;

  void validate() const;
};

// Exact (Frobenius, weighted) for exponent-2 codomains; Gaussian Monte Carlo
// otherwise.  Basis-independent by rotation invariance.
MomentEstimate gamma_norm(const GammaOperator& psi, const RandomConfig& cfg);

struct GammaMultiplierReport {
  double lhs = 0.0;        // (E||sum r_n Psi_n f_n||^2)^{1/2}, exact enumeration
  double sup_f = 0.0;      // max_n ||f_n||_H
  double gamma_factor = 0.0;  // (E||sum r_n Psi_n||^2_{gamma})^{1/2}
  double rhs = 0.0;        // sup_f * gamma_factor
  double ratio = 0.0;      // lhs / rhs, the empirical constant
  int n = 0;
};

// Tests ||sum r_n Psi_n f_n|| <= C sup||f_n|| ||sum r_n Psi_n||_gamma: exact
// outer sign enumeration, inner gamma-norm exact or Monte Carlo per pattern.
GammaMultiplierReport verify_gamma_multiplier(const std::vector<GammaOperator>& psis,
                                              const std::vector<Vector>& fs,
                                              const RandomConfig& cfg);

}  // namespace rblab
