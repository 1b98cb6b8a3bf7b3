#include "rblab/moments.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "rblab/errors.hpp"
#include "rblab/parallel.hpp"
#include "rblab/random.hpp"

namespace rblab {

namespace {

void validate_inputs(const std::vector<Vector>& xs, double p, const RandomConfig& cfg) {
  if (xs.empty()) throw DegenerateInput("moment: empty vector list");
  if (!(p >= 1.0) || p == std::numeric_limits<double>::infinity())
    throw InvalidParameter("moment: p must lie in [1, inf)");
  if (cfg.exact_threshold > 30) throw InvalidParameter("moment: exact_threshold capped at 30");
  if (cfg.samples < 1) throw InvalidParameter("moment: samples must be >= 1");
  if (cfg.partitions < 1) throw InvalidParameter("moment: partitions must be >= 1");
  for (const auto& x : xs) {
    if (static_cast<int>(x.coords.size()) != x.space.dim)
      throw DimensionError("moment: vector length does not match its space");
    if (!spaces_equal(x.space, xs.front().space))
      throw DimensionError("moment: vectors live in different spaces");
  }
}

// Partitioned Monte Carlo mean of ||sum g_n(omega) x_n||^p; draws come from
// draw(rng) per coefficient. Deterministic for fixed (seed, samples,
// partitions); worker threads only execute the fixed partitions.
MomentEstimate monte_carlo_moment(const std::vector<Vector>& xs, double p, const RandomConfig& cfg,
                                  double (Rng::*draw)()) {
  const int n = static_cast<int>(xs.size());
  const int dim = xs.front().space.dim;
  const NormedSpace& space = xs.front().space;
  const int parts = cfg.partitions;
  std::vector<double> part_sum(parts, 0.0), part_sumsq(parts, 0.0);
  std::vector<std::int64_t> part_count(parts, 0);
  for (int q = 0; q < parts; ++q)
    part_count[q] = cfg.samples / parts + (q < cfg.samples % parts ? 1 : 0);
  parallel_for(parts, [&](int q) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(q)));
    std::vector<double> sum(static_cast<std::size_t>(dim));
    double acc = 0.0, accsq = 0.0;
    for (std::int64_t s = 0; s < part_count[q]; ++s) {
      std::fill(sum.begin(), sum.end(), 0.0);
      for (int k = 0; k < n; ++k) {
        double g = (rng.*draw)();
        const auto& c = xs[k].coords;
        for (int i = 0; i < dim; ++i) sum[i] += g * c[i];
      }
      double z = std::pow(vector_norm(space, sum), p);
      acc += z;
      accsq += z * z;
    }
    part_sum[q] = acc;
    part_sumsq[q] = accsq;
  });
  double total = 0.0, totalsq = 0.0;
  std::int64_t count = 0;
  for (int q = 0; q < parts; ++q) {
    total += part_sum[q];
    totalsq += part_sumsq[q];
    count += part_count[q];
  }
  double mean = total / static_cast<double>(count);
  double var = std::max(0.0, totalsq / static_cast<double>(count) - mean * mean);
  double se_mean = std::sqrt(var / static_cast<double>(count));
  double value = std::pow(mean, 1.0 / p);
  // delta method: d/dm m^{1/p} = (1/p) m^{1/p-1}
  double se = (mean > 0.0) ? (1.0 / p) * std::pow(mean, 1.0 / p - 1.0) * se_mean : 0.0;
  return MomentEstimate{value, "montecarlo", count, cfg.seed, se};
}

}  // namespace

void for_each_sign_pattern(const std::vector<std::vector<double>>& xs, int dim,
                           const std::function<void(const std::vector<double>&)>& visit) {
  const int n = static_cast<int>(xs.size());
  std::vector<double> signs(static_cast<std::size_t>(n), 1.0);
  std::vector<double> sum(static_cast<std::size_t>(dim), 0.0);
  auto recompute = [&] {
    std::fill(sum.begin(), sum.end(), 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < dim; ++i) sum[i] += signs[k] * xs[k][i];
  };
  recompute();
  visit(sum);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    int j = std::countr_zero(step);  // Gray code: flip the lowest set bit index
    signs[j] = -signs[j];
    if ((step & 0xFFFu) == 0) {
      recompute();
    } else {
      double two_s = 2.0 * signs[j];
      const auto& x = xs[j];
      for (int i = 0; i < dim; ++i) sum[i] += two_s * x[i];
    }
    visit(sum);
  }
}

MomentEstimate rademacher_moment(const std::vector<Vector>& xs, double p, const RandomConfig& cfg) {
  validate_inputs(xs, p, cfg);
  const int n = static_cast<int>(xs.size());
  if (n <= cfg.exact_threshold) {
    const NormedSpace& space = xs.front().space;
    std::vector<std::vector<double>> coords;
    coords.reserve(xs.size());
    for (const auto& x : xs) coords.push_back(x.coords);
    double acc = 0.0;
    for_each_sign_pattern(coords, space.dim, [&](const std::vector<double>& sum) {
      acc += std::pow(vector_norm(space, sum), p);
    });
    double mean = acc / static_cast<double>(std::uint64_t{1} << n);
    return MomentEstimate{std::pow(mean, 1.0 / p), "exact",
                          static_cast<std::int64_t>(std::uint64_t{1} << n), cfg.seed, 0.0};
  }
  return monte_carlo_moment(xs, p, cfg, &Rng::sign);
}

MomentEstimate gaussian_moment(const std::vector<Vector>& xs, double p, const RandomConfig& cfg) {
  validate_inputs(xs, p, cfg);
  const NormedSpace& space = xs.front().space;
  if (space.exponent == 2.0 && p == 2.0) {
    // E || sum gamma_n x_n ||_2^2 = sum ||x_n||_2^2, exact for any weights
    double acc = 0.0;
    for (const auto& x : xs) {
      double nm = vector_norm(x);
      acc += nm * nm;
    }
    return MomentEstimate{std::sqrt(acc), "exact", 0, cfg.seed, 0.0};
  }
  return monte_carlo_moment(xs, p, cfg, &Rng::normal);
}

}  // namespace rblab
