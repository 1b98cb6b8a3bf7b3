#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/gamma.hpp"
#include "rblab/random.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

TEST_CASE("Euclidean codomain: the norm is the Frobenius norm") {
  auto h3 = NormedSpace::lp(3, 2.0);
  RandomConfig cfg;
  GammaOperator id{Matrix::identity(3), h3, 3};
  auto m = gamma_norm(id, cfg);
  CHECK(m.method == "exact");
  CHECK(m.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

  GammaOperator d{Matrix::diagonal({3.0, 4.0}), NormedSpace::lp(2, 2.0), 2};
  CHECK(gamma_norm(d, cfg).value == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("rank-one operators factor into the two lengths") {
  // Psi = u v^T maps e_k to v_k u; Gaussian sum has norm ||u|| ||v||
  std::vector<double> u{1.0, 2.0};
  std::vector<double> v{3.0, 4.0};
  Matrix m(2, 2, {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]});
  GammaOperator psi{m, NormedSpace::lp(2, 2.0), 2};
  RandomConfig cfg;
  CHECK(gamma_norm(psi, cfg).value == doctest::Approx(5.0 * std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("rotation invariance and homogeneity") {
  auto h3 = NormedSpace::lp(3, 2.0);
  Rng rng(17);
  Matrix m(3, 3);
  for (auto& e : m.a) e = rng.normal();
  RandomConfig cfg;
  GammaOperator psi{m, h3, 3};
  double base = gamma_norm(psi, cfg).value;

  auto q = random_orthogonal(3, rng);
  Matrix mq(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += m.at(r, k) * q.at(k, c);
      mq.at(r, c) = acc;
    }
  GammaOperator rot{mq, h3, 3};
  CHECK(gamma_norm(rot, cfg).value == doctest::Approx(base).epsilon(1e-12));

  GammaOperator scaled{mat_scale(m, -2.5), h3, 3};
  CHECK(gamma_norm(scaled, cfg).value == doctest::Approx(2.5 * base).epsilon(1e-12));
}

TEST_CASE("non-Euclidean codomain falls back to Monte Carlo") {
  // codomain l^1_2, Psi = I_2: E||(g_1, g_2)||_1^2 = 2 + 4/pi
  GammaOperator psi{Matrix::identity(2), NormedSpace::lp(2, 1.0), 2};
  RandomConfig cfg;
  cfg.samples = 40000;
  auto a = gamma_norm(psi, cfg);
  auto b = gamma_norm(psi, cfg);
  CHECK(a.method == "montecarlo");
  CHECK(a.value == b.value);  // bitwise reproducible
  double expect = std::sqrt(2.0 + 4.0 / 3.14159265358979323846);
  CHECK(std::fabs(a.value - expect) <= 4.0 * a.stderr_est);
}

TEST_CASE("multiplier inequality for a singleton family") {
  auto h2 = NormedSpace::lp(2, 2.0);
  Rng rng(23);
  Matrix m(2, 2);
  for (auto& e : m.a) e = rng.normal();
  GammaOperator psi{m, h2, 2};
  auto f = make_vector(NormedSpace::lp(2, 2.0), {rng.normal(), rng.normal()});
  RandomConfig cfg;
  auto rep = verify_gamma_multiplier({psi}, {f}, cfg);
  CHECK(rep.n == 1);
  CHECK(rep.ratio <= 1.0 + 1e-9);
  CHECK(rep.lhs <= rep.rhs + 1e-9 * rep.rhs);
  CHECK(rep.sup_f == doctest::Approx(vector_norm(f)).epsilon(1e-15));
}

TEST_CASE("shape validation") {
  auto h2 = NormedSpace::lp(2, 2.0);
  GammaOperator bad{Matrix::identity(3), h2, 3};  // 3x3 against a 2-dim codomain
  CHECK_THROWS_AS(bad.validate(), DimensionError);

  GammaOperator ok{Matrix::identity(2), h2, 2};
  auto f = make_vector(h2, {1.0, 0.0});
  RandomConfig cfg;
  CHECK_THROWS_AS(verify_gamma_multiplier({ok, ok}, {f}, cfg), DimensionError);
}
