#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rblab/spaces.hpp"

namespace rblab {

struct RandomConfig {
  std::uint64_t seed = 24601;
  std::int64_t samples = 100000;
  int exact_threshold = 20;  // enumerate all sign patterns when N <= this; capped at 30
  int partitions = 1;        // MC sample range split; results depend on (seed, samples, partitions)
  int restarts = 8;          // random restarts for search routines
};

struct MomentEstimate {
  double value = 0.0;
  std::string method;  // "exact" | "montecarlo"
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double stderr_est = 0.0;  // 0 for exact; delta-method standard error for MC
};

// (E || sum_n eps_n x_n ||^p)^{1/p} over independent uniform signs.
// Exact Gray-code enumeration of all 2^N patterns when N <= exact_threshold,
// Monte Carlo otherwise. All vectors must share one space. p >= 1.
MomentEstimate rademacher_moment(const std::vector<Vector>& xs, double p, const RandomConfig& cfg);

// Same moment driven by independent standard Gaussians. Monte Carlo only,
// except the closed form (sum_n ||x_n||^2)^{1/2} when the space has exponent 2
// and p = 2.
MomentEstimate gaussian_moment(const std::vector<Vector>& xs, double p, const RandomConfig& cfg);

// Enumerate all 2^N sign patterns with one flip per step (Gray order),
// maintaining the running sum; visit(sum) is called once per pattern. The sum
// is recomputed from scratch every 4096 steps to keep float drift negligible.
void for_each_sign_pattern(const std::vector<std::vector<double>>& xs, int dim,
                           const std::function<void(const std::vector<double>&)>& visit);

}  // namespace rblab
