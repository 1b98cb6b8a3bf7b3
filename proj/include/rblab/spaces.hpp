#pragma once

#include <cstdint>
#include <vector>

namespace rblab {

// Finite-dimensional weighted l^p. Weights act as measure weights:
//   ||x|| = (sum_i w_i |x_i|^p)^{1/p},  p = inf -> max_i |x_i|
// (the sup norm ignores weights, matching the ess-sup of a step function).
// An empty weight vector means all weights are 1.
struct NormedSpace {
  int dim = 0;
  double exponent = 2.0;
  std::vector<double> weights;  // empty or size dim

  static NormedSpace lp(int dim, double exponent) { return NormedSpace{dim, exponent, {}}; }
  static NormedSpace weighted_lp(int dim, double exponent, std::vector<double> w) {
    return NormedSpace{dim, exponent, std::move(w)};
  }
  bool is_hilbert() const { return exponent == 2.0; }
};

bool spaces_equal(const NormedSpace& a, const NormedSpace& b);

// Element of a NormedSpace; carries its space so mismatches are detectable.
struct Vector {
  NormedSpace space;
  std::vector<double> coords;
};

Vector make_vector(const NormedSpace& space, std::vector<double> coords);
Vector basis_vector(const NormedSpace& space, int i);

double vector_norm(const NormedSpace& space, const std::vector<double>& coords);
inline double vector_norm(const Vector& v) { return vector_norm(v.space, v.coords); }

// Dual space under the unweighted pairing sum_i x_i y_i: exponent p -> p',
// weights w -> w^{1-p'}. Exponents 1 and inf are rejected.
NormedSpace dual_space(const NormedSpace& s);

}  // namespace rblab
