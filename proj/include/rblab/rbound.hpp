#pragma once

#include <cstdint>
#include <vector>

#include "rblab/linalg.hpp"
#include "rblab/moments.hpp"
#include "rblab/spaces.hpp"

namespace rblab {

// Finite family of operators X -> Y as dense matrices (codomain.dim x domain.dim).
struct OperatorFamily {
  NormedSpace domain;
  NormedSpace codomain;
  std::vector<Matrix> operators;
};

// One test point of the defining inequality: operators T_{k_n} paired with
// vectors x_n in the domain. Lengths must match; vectors must not all be zero.
struct Assignment {
  std::vector<int> operator_indices;
  std::vector<Vector> vectors;
};

enum class SearchStrategy { random, coordinate_ascent, exhaustive_small };

struct RBoundEstimate {
  double lower_bound = 0.0;
  Assignment witness;
  std::int64_t ratio_evals = 0;
  SearchStrategy strategy = SearchStrategy::random;
};

// (E||sum r_n T_{k_n} x_n||^2)^{1/2} / (E||sum r_n x_n||^2)^{1/2} with exact
// enumeration or MC per the config. Throws DegenerateInput when all vectors
// are zero.
double rbound_ratio(const OperatorFamily& family, const Assignment& a, const RandomConfig& cfg);

// Lower estimate for the R-bound by maximizing rbound_ratio over assignments
// of length N (plus the always-included single-operator basis/random probes,
// so the result is never below the best singleton ratio found). Monotone
// non-decreasing in cfg.samples for a fixed seed: iteration i draws from a
// seed derived from (seed, i) independent of the total budget.
RBoundEstimate rbound_lower(const OperatorFamily& family, int N, const RandomConfig& cfg,
                            SearchStrategy strategy = SearchStrategy::coordinate_ascent);

// max_k of a lower estimate of ||T_k||_{X->Y}: all standard basis directions,
// seeded random unit vectors, and a short ascent. Exact for diagonal matrices
// between equal-exponent spaces and for exponent-2 pairs (singular value).
double uniform_norm_lower(const OperatorFamily& family, const RandomConfig& cfg);

// Transposed matrices between the dual spaces (exponents in (1, inf) only).
OperatorFamily adjoint_family(const OperatorFamily& family);

// sup_k ||T_k|| for exponent-2 domain and codomain (weighted singular value);
// equals the R-bound there. Throws InvalidParameter on other exponents.
double hilbert_rbound_cap(const OperatorFamily& family);

// ||T||_{X->Y} upper bound via Hoelder on columns:
// ||Tx||_q <= || (||col_j||_Y)_j ||_{p'} ||x||_p. Exact when domain exponent
// is 1. Used for sound caps; not a lower estimate.
double operator_norm_upper(const Matrix& m, const NormedSpace& domain, const NormedSpace& codomain);

}  // namespace rblab
