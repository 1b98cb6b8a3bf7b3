#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/moments.hpp"
#include "rblab/spaces.hpp"
#include "rblab/typecotype.hpp"

using namespace rblab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("Euclidean space has type 2 and cotype 2 with constant one") {
  auto s = NormedSpace::lp(3, 2.0);
  RandomConfig cfg;
  cfg.restarts = 2;
  for (int N : {1, 3, 5}) {
    auto t = type_constant_lower(s, 2.0, N, cfg);
    CHECK(std::fabs(t.constant_lower - 1.0) < 1e-9);
    CHECK(std::fabs(t.basis_probe_ratio - 1.0) < 1e-9);
    auto c = cotype_constant_lower(s, 2.0, N, cfg);
    CHECK(std::fabs(c.constant_lower - 1.0) < 1e-9);
    CHECK(c.ratio_evals > 0);
  }
}

TEST_CASE("sup-norm space: basis probe shows the sqrt(N) cotype-2 lower bound") {
  auto s = NormedSpace::lp(4, kInf);
  RandomConfig cfg;
  cfg.restarts = 1;
  auto r = cotype_constant_lower(s, 2.0, 4, cfg);
  // numerator (sum ||e_n||^2)^{1/2} = 2 exactly; denominator = 1 exactly
  CHECK(r.basis_probe_ratio == 2.0);
  CHECK(r.constant_lower >= 2.0);
}

TEST_CASE("mixed norm of an indicator system is the plain coordinate sum") {
  double q = 2.0;
  int N = 3;
  auto fns = disjoint_indicator_system(N, 0.5, q);
  DiscreteMeasureSpace S = fns[0].space;
  auto x = NormedSpace::lp(2, 2.0);
  std::vector<Vector> xs{make_vector(x, {1.0, 2.0}), make_vector(x, {0.0, -1.0}),
                         make_vector(x, {3.0, 1.0})};
  RandomConfig cfg;
  double got = mixed_lq_rad_norm(S, fns, xs, q, cfg);
  double expect = 0.0;
  for (const auto& v : xs) {
    double nn = vector_norm(v);
    expect += std::pow(nn, q);
  }
  expect = std::pow(expect, 1.0 / q);
  CHECK(got == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("normalized indicators have unit norms") {
  for (double q : {1.0, 2.0, 3.0}) {
    auto fns = disjoint_indicator_system(4, 0.7, q);
    REQUIRE(fns.size() == 4);
    for (const auto& f : fns) CHECK(std::fabs(lp_norm(f, q) - 1.0) < 1e-12);
  }
}

TEST_CASE("max distribution integral on step data") {
  // single function: int_0^inf mu(|f| > t)^{1/q} dt
  StepFunction f{DiscreteMeasureSpace{{0.5, 0.5}}, {2.0, 0.0}};
  // mu(|f|>t) = 0.5 for t in [0,2), so integral = 2 * 0.5^{1/2} = sqrt(2)
  CHECK(max_distribution_integral({f}, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // two indicators with heights 1 and 3, q = 1
  StepFunction a{DiscreteMeasureSpace{{0.5, 0.5}}, {1.0, 0.0}};
  StepFunction b{DiscreteMeasureSpace{{0.5, 0.5}}, {0.0, 3.0}};
  // max over n of mu_n(|f_n|>t): 0.5 for t<1 (both), 0.5 for t in [1,3) (only b)
  CHECK(max_distribution_integral({a, b}, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<double> ns{2.0, 4.0, 8.0};
  std::vector<double> vs;
  for (double n : ns) vs.push_back(3.0 * std::pow(n, 1.5));
  auto fit = fit_loglog(ns, vs);
  CHECK(std::fabs(fit.slope - 1.5) < 1e-12);
  CHECK(fit.stderr_slope < 1e-10);
  CHECK(std::fabs(fit.intercept - std::log(3.0)) < 1e-10);
}

TEST_CASE("exponent ranges are enforced") {
  auto s = NormedSpace::lp(2, 2.0);
  RandomConfig cfg;
  CHECK_THROWS_AS(type_constant_lower(s, 3.0, 2, cfg), InvalidParameter);
  CHECK_THROWS_AS(type_constant_lower(s, 0.5, 2, cfg), InvalidParameter);
  CHECK_THROWS_AS(cotype_constant_lower(s, 1.5, 2, cfg), InvalidParameter);
}
