#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/moments.hpp"
#include "rblab/random.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

namespace {
std::vector<Vector> basis_family(const NormedSpace& s, int N) {
  std::vector<Vector> xs;
  for (int i = 0; i < N; ++i) xs.push_back(basis_vector(s, i % s.dim));
  return xs;
}
}  // namespace

TEST_CASE("orthonormal basis sums are Pythagorean") {
  auto s = NormedSpace::lp(4, 2.0);
  auto xs = basis_family(s, 4);
  RandomConfig cfg;
  auto m = rademacher_moment(xs, 2.0, cfg);
  CHECK(m.method == "exact");
  CHECK(m.value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m.stderr_est == 0.0);
}

TEST_CASE("scalar contraction") {
  // shrinking coefficients never increases the moment
  auto s = NormedSpace::lp(3, 4.0);
  Rng rng(31);
  RandomConfig cfg;
  for (int t = 0; t < 10; ++t) {
    std::vector<Vector> xs, ys;
    for (int n = 0; n < 5; ++n) {
      std::vector<double> c(3);
      for (auto& v : c) v = rng.uniform(-2.0, 2.0);
      double a = rng.uniform01();  // |a| <= 1
      std::vector<double> ac = c;
      for (auto& v : ac) v *= a;
      xs.push_back(make_vector(s, c));
      ys.push_back(make_vector(s, ac));
    }
    double full = rademacher_moment(xs, 2.0, cfg).value;
    double shrunk = rademacher_moment(ys, 2.0, cfg).value;
    CHECK(shrunk <= full + 1e-12);
  }
}

TEST_CASE("moments grow with the exponent") {
  auto s = NormedSpace::lp(3, 3.0);
  Rng rng(77);
  std::vector<Vector> xs;
  for (int n = 0; n < 6; ++n) {
    std::vector<double> c(3);
    for (auto& v : c) v = rng.uniform(-1.0, 1.0);
    xs.push_back(make_vector(s, c));
  }
  RandomConfig cfg;
  double m1 = rademacher_moment(xs, 1.0, cfg).value;
  double m2 = rademacher_moment(xs, 2.0, cfg).value;
  double m4 = rademacher_moment(xs, 4.0, cfg).value;
  CHECK(m1 <= m2 + 1e-12);
  CHECK(m2 <= m4 + 1e-12);
}

TEST_CASE("gaussian closed form in the Euclidean case") {
  auto s = NormedSpace::lp(2, 2.0);
  std::vector<Vector> xs{make_vector(s, {1.0, 0.0}), make_vector(s, {0.0, 2.0})};
  RandomConfig cfg;
  auto m = gaussian_moment(xs, 2.0, cfg);
  CHECK(m.method == "exact");
  CHECK(m.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("monte carlo agrees with the exact value within its own error bar") {
  auto s = NormedSpace::lp(3, 2.0);
  int N = 25;  // above the enumeration threshold
  Rng rng(55);
  std::vector<Vector> xs;
  double sum_sq = 0.0;
  for (int n = 0; n < N; ++n) {
    std::vector<double> c(3);
    for (auto& v : c) v = rng.uniform(-1.0, 1.0);
    xs.push_back(make_vector(s, c));
    double nn = vector_norm(xs.back());
    sum_sq += nn * nn;
  }
  double exact = std::sqrt(sum_sq);  // Euclidean: independent of the sign law
  RandomConfig cfg;
  cfg.samples = 20000;
  auto m = rademacher_moment(xs, 2.0, cfg);
  CHECK(m.method == "montecarlo");
  CHECK(m.stderr_est > 0.0);
  CHECK(std::fabs(m.value - exact) <= 4.0 * m.stderr_est);
}

TEST_CASE("monte carlo is bitwise deterministic") {
  auto s = NormedSpace::lp(2, 4.0);
  std::vector<Vector> xs;
  Rng rng(91);
  for (int n = 0; n < 25; ++n) {
    std::vector<double> c(2);
    for (auto& v : c) v = rng.uniform(-1.0, 1.0);
    xs.push_back(make_vector(s, c));
  }
  RandomConfig cfg;
  cfg.samples = 5000;
  auto a = rademacher_moment(xs, 2.0, cfg);
  auto b = rademacher_moment(xs, 2.0, cfg);
  CHECK(a.value == b.value);

  cfg.partitions = 2;
  auto c2 = rademacher_moment(xs, 2.0, cfg);
  auto d2 = rademacher_moment(xs, 2.0, cfg);
  CHECK(c2.value == d2.value);
}

TEST_CASE("input validation") {
  auto s = NormedSpace::lp(2, 2.0);
  std::vector<Vector> xs{basis_vector(s, 0)};
  RandomConfig cfg;
  cfg.exact_threshold = 31;
  CHECK_THROWS_AS(rademacher_moment(xs, 2.0, cfg), InvalidParameter);
  RandomConfig ok;
  CHECK_THROWS_AS(rademacher_moment(xs, 0.5, ok), InvalidParameter);
  CHECK_THROWS_AS(rademacher_moment({}, 2.0, ok), DegenerateInput);
  std::vector<Vector> mixed{basis_vector(s, 0), basis_vector(NormedSpace::lp(3, 2.0), 0)};
  CHECK_THROWS_AS(rademacher_moment(mixed, 2.0, ok), DimensionError);
}

TEST_CASE("sign pattern enumeration visits every pattern") {
  std::vector<std::vector<double>> xs{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  int count = 0;
  std::vector<double> total(2, 0.0);
  for_each_sign_pattern(xs, 2, [&](const std::vector<double>& sum) {
    ++count;
    total[0] += sum[0];
    total[1] += sum[1];
  });
  CHECK(count == 8);
  // each vector appears with + and - equally often, so everything cancels
  CHECK(std::fabs(total[0]) < 1e-12);
  CHECK(std::fabs(total[1]) < 1e-12);
}
