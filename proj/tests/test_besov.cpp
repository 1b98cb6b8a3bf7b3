#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rblab/besov.hpp"
#include "rblab/errors.hpp"
#include "rblab/linalg.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

namespace {
GridFunction linear_grid(int n) {
  return sample_scalar(0.0, 1.0, n, [](double r) { return r; });
}
}  // namespace

TEST_CASE("constant functions carry no smoothness mass") {
  auto f = sample_scalar(0.0, 1.0, 256, [](double) { return 2.5; });
  BesovParams prm;
  prm.s = 0.5;
  prm.p = 2.0;
  prm.q = 1.0;
  CHECK(lambda_besov_norm(f, prm) == doctest::Approx(2.5).epsilon(1e-12));

  // reading zero outside the interval turns the boundary into a jump
  BesovParams ze = prm;
  ze.convention = ModulusConvention::zero_extend;
  CHECK(lambda_besov_norm(f, ze) > lambda_besov_norm(f, prm) + 0.1);
}

TEST_CASE("linear profile matches the exact dyadic closed form") {
  int n = 1 << 12;
  auto f = linear_grid(n);
  BesovParams prm;
  prm.s = 0.5;
  prm.p = 1.0;
  prm.q = 1.0;
  prm.levels = 12;
  double expected = 0.5;  // exact L^1 mass of r on (0,1) at midpoints
  double sum = 0.0;
  for (int j = 0; j <= prm.levels; ++j) {
    double h = std::min(std::pow(2.0, -j), 0.5);
    sum += std::pow(2.0, 0.5 * j) * h * (1.0 - h);
  }
  expected += std::log(2.0) * sum;
  CHECK(lambda_besov_norm(f, prm) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("modulus of a jump grows linearly in the shift budget") {
  int n = 256;
  auto f = sample_scalar(0.0, 1.0, n, [](double r) { return r >= 0.5 ? 1.0 : 0.0; });
  CHECK(modulus_rho(f, 0.125, 1.0, ModulusConvention::restrict) ==
        doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("the norm is 1-homogeneous") {
  auto f = linear_grid(512);
  auto g = f;
  for (auto& v : g.scalars) v *= 2.7;
  BesovParams prm;
  prm.s = 0.3;
  prm.p = 2.0;
  prm.q = 2.0;
  CHECK(lambda_besov_norm(g, prm) == doctest::Approx(2.7 * lambda_besov_norm(f, prm)).epsilon(1e-12));
}

TEST_CASE("value stabilizes under grid refinement") {
  BesovParams prm;
  prm.s = 0.5;
  prm.p = 2.0;
  prm.q = 1.0;
  prm.levels = 8;  // both grids resolve a 2^-8 shift honestly
  auto coarse = sample_scalar(0.0, 1.0, 1 << 9,
                              [](double r) { return std::sin(3.14159265358979323846 * r); });
  auto fine = sample_scalar(0.0, 1.0, 1 << 10,
                            [](double r) { return std::sin(3.14159265358979323846 * r); });
  double a = lambda_besov_norm(coarse, prm);
  double b = lambda_besov_norm(fine, prm);
  CHECK(std::fabs(a - b) / b < 0.02);
}

TEST_CASE("vector and operator samples reduce to the scalar case") {
  int n = 128;
  auto scalar = linear_grid(n);
  BesovParams prm;
  prm.s = 0.4;
  prm.p = 2.0;
  prm.q = 1.0;
  double ref = lambda_besov_norm(scalar, prm);

  auto e = NormedSpace::lp(2, 2.0);
  std::vector<Vector> vecs;
  std::vector<Matrix> mats;
  for (int i = 0; i < n; ++i) {
    double v = scalar.scalars[static_cast<std::size_t>(i)];
    vecs.push_back(make_vector(e, {v, 0.0}));
    mats.push_back(Matrix::diagonal({v, v}));
  }
  auto vg = make_vector_grid(0.0, 1.0, vecs);
  CHECK(lambda_besov_norm(vg, prm) == doctest::Approx(ref).epsilon(1e-12));

  auto og = make_operator_grid(0.0, 1.0, mats, e, e);
  og.exact_norms = true;
  CHECK(lambda_besov_norm(og, prm) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("pointwise growth certificate") {
  auto lin = linear_grid(256);
  auto rep = holder_hypothesis_check(lin, 0.9, 2.0, 1.0);
  CHECK(rep.holds);
  CHECK(rep.violations.empty());
  CHECK(rep.bound_ratio > 0.0);

  auto rt = sample_scalar(0.0, 1.0, 256, [](double r) { return std::sqrt(r); });
  auto bad = holder_hypothesis_check(rt, 0.9, 2.0, 0.3);
  CHECK_FALSE(bad.holds);
  CHECK(bad.violations.size() >= 1);
  CHECK(bad.violations.size() <= 16);

  CHECK_THROWS_AS(holder_hypothesis_check(lin, 0.4, 2.0, 1.0), InvalidParameter);
}

TEST_CASE("parameter validation") {
  auto f = linear_grid(64);
  BesovParams bad_s;
  bad_s.s = 1.2;
  CHECK_THROWS_AS(lambda_besov_norm(f, bad_s), InvalidParameter);
  BesovParams bad_q;
  bad_q.q = 0.5;
  CHECK_THROWS_AS(lambda_besov_norm(f, bad_q), InvalidParameter);
}
