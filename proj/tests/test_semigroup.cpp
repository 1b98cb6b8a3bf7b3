#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/semigroup.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

namespace {
DiagonalSemigroup diag_group(std::vector<double> rates, double exponent = 2.0) {
  int d = static_cast<int>(rates.size());
  return DiagonalSemigroup{std::move(rates), NormedSpace::lp(d, exponent)};
}
}  // namespace

TEST_CASE("diagonal semigroup decay") {
  auto g = diag_group({1.0, 2.0});
  auto x = make_vector(g.space, {1.0, 1.0});
  auto y = semigroup_apply(g, std::log(2.0), x);
  CHECK(y.coords[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(y.coords[1] == doctest::Approx(0.25).epsilon(1e-15));

  auto z = semigroup_apply(g, 0.0, x);
  CHECK(z.coords == x.coords);
  CHECK_THROWS_AS(semigroup_apply(g, -0.1, x), InvalidParameter);

  // semigroup law
  auto ab = semigroup_apply(g, 0.7, semigroup_apply(g, 0.3, x));
  auto once = semigroup_apply(g, 1.0, x);
  CHECK(ab.coords[0] == doctest::Approx(once.coords[0]).epsilon(1e-12));
  CHECK(ab.coords[1] == doctest::Approx(once.coords[1]).epsilon(1e-12));
}

TEST_CASE("translation on a periodic grid") {
  TranslationGroup g{2.0, 4, 1.0};
  auto x = make_vector(g.space(), {1.0, 2.0, 3.0, 4.0});
  auto shifted = semigroup_apply(g, g.step(), x);
  CHECK(shifted.coords == std::vector<double>{2.0, 3.0, 4.0, 1.0});
  auto full = semigroup_apply(g, g.circumference, x);
  CHECK(full.coords == x.coords);
}

TEST_CASE("fractional powers of a diagonal generator") {
  auto g = diag_group({4.0});
  auto x = make_vector(g.space, {1.0});
  auto y = fractional_power_apply(g, 0.5, x);
  CHECK(y.coords[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(fractional_power_apply(g, 1.5, x), InvalidParameter);
}

TEST_CASE("Fourier multiplier action on a pure mode") {
  TranslationGroup g{2.0, 64, 2.0};
  int n = g.n;
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    c[static_cast<std::size_t>(i)] = std::cos(3.0 * 3.14159265358979323846 * g.sample_point(i));
  auto x = make_vector(g.space(), c);
  double alpha = 0.5;
  auto y = fractional_power_apply(g, alpha, x, FractionalKind::bessel);
  double xi = 2.0 * 3.14159265358979323846 * 3.0 / g.circumference;
  double factor = std::pow(1.0 + xi * xi, alpha / 2.0);
  for (int i = 0; i < n; ++i)
    CHECK(std::fabs(y.coords[static_cast<std::size_t>(i)] -
                    factor * c[static_cast<std::size_t>(i)]) < 1e-9);
}

TEST_CASE("homogeneous fractional powers compose") {
  TranslationGroup g{2.0, 64, 2.0};
  std::vector<double> c(64);
  for (int i = 0; i < 64; ++i) {
    double s = g.sample_point(i);
    c[static_cast<std::size_t>(i)] =
        std::sin(3.14159265358979323846 * s) + 0.3 * std::cos(2.0 * 3.14159265358979323846 * s);
  }
  auto x = make_vector(g.space(), c);
  auto twice = fractional_power_apply(g, 0.3, fractional_power_apply(g, 0.3, x, FractionalKind::generator_power),
                                      FractionalKind::generator_power);
  auto direct = fractional_power_apply(g, 0.6, x, FractionalKind::generator_power);
  for (int i = 0; i < 64; ++i)
    CHECK(std::fabs(twice.coords[static_cast<std::size_t>(i)] -
                    direct.coords[static_cast<std::size_t>(i)]) < 1e-9);
}

TEST_CASE("graph norm and embedding norm") {
  auto g = diag_group({1.0});
  auto x = make_vector(g.space, {1.0});
  CHECK(graph_d_norm(g, 1.0, x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  auto g2 = diag_group({1.0, 16.0});
  CHECK(embedding_norm(g2, 0.5) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  auto dom = fractional_domain_space(g2, 0.5);
  CHECK(dom.weights[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dom.weights[1] == doctest::Approx(1.0 + 16.0).epsilon(1e-12));
}

TEST_CASE("dilated profiles obey the homogeneous scaling law") {
  TranslationGroup g{32.0, 1 << 15, 2.0};
  int n = g.n;
  double alpha = 0.6;
  auto sample_scaled = [&](int N) {
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(i)] = default_bump(N * g.sample_point(i));
    return make_vector(g.space(), c);
  };
  auto base = sample_scaled(1);
  double base_norm = vector_norm(fractional_power_apply(g, alpha, base, FractionalKind::generator_power));
  for (int N : {2, 4}) {
    double scaled_norm =
        vector_norm(fractional_power_apply(g, alpha, sample_scaled(N), FractionalKind::generator_power));
    double expect = std::pow(static_cast<double>(N), alpha - 1.0 / g.p) * base_norm;
    CHECK(std::fabs(scaled_norm / expect - 1.0) < 0.02);
  }
}

TEST_CASE("holder rate constant") {
  CHECK(holder_rate_constant(0.5) == doctest::Approx(0.6381726559).epsilon(1e-4));
  CHECK(holder_rate_constant(1.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(holder_rate_constant(1.5), InvalidParameter);
}

TEST_CASE("semigroup family experiment on a diagonal generator") {
  auto g = diag_group({1.0, 3.0});
  RandomConfig cfg;
  cfg.restarts = 2;
  auto single = thm_semigroup_experiment(g, 0.75, 1.0, 2.0, 4, {0.0}, cfg);
  CHECK(std::fabs(single.normalized_lower - 1.0) < 1e-9);
  CHECK(single.holder_values.empty());
  CHECK(single.holder_ok);

  auto multi = thm_semigroup_experiment(g, 0.75, 1.0, 2.0, 4, {0.0, 0.5, 1.0}, cfg);
  CHECK(multi.normalized_lower <= 1.0 + 1e-9);
  CHECK(multi.holder_values.size() == 2);
  CHECK(multi.holder_sup <= multi.holder_cap + 1e-9);
  CHECK(multi.holder_ok);

  CHECK_THROWS_AS(thm_semigroup_experiment(g, 0.4, 1.0, 2.0, 4, {0.0}, cfg), InvalidParameter);
}

TEST_CASE("scaled translate families and the slope of their bound ratio") {
  SharpnessConfig cfg;
  cfg.p = 1.0;
  cfg.alpha = 0.25;
  cfg.grid_n = 1 << 10;
  cfg.N_values = {2, 4};
  auto rep = sharpness_experiment(cfg);
  REQUIRE(rep.rows.size() == 2);
  for (const auto& row : rep.rows) {
    CHECK(row.numerator == doctest::Approx(row.psi_coarse_lp).epsilon(1e-12));
    CHECK(row.Q > 0.0);
  }
  CHECK(rep.max_sign_dependence <= 1e-10);
  CHECK(rep.expected_slope == doctest::Approx(0.25).epsilon(1e-15));

  SharpnessConfig bad = cfg;
  bad.N_values = {2, 3};
  CHECK_THROWS_AS(sharpness_experiment(bad), InvalidParameter);
}

TEST_CASE("bump profile") {
  CHECK(default_bump(0.5) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(default_bump(0.0) == 0.0);
  CHECK(default_bump(1.0) == 0.0);
  CHECK(default_bump(-0.3) == 0.0);
  auto prof = default_bump_profile(1 << 8);
  CHECK(prof.n() == 1 << 8);
  CHECK(prof.a == 0.0);
  CHECK(prof.b == 1.0);
}
