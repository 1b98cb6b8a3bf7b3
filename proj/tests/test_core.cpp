#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/fft.hpp"
#include "rblab/linalg.hpp"
#include "rblab/parallel.hpp"
#include "rblab/random.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("vector norms on (3, -4)") {
  std::vector<double> x{3.0, -4.0};
  CHECK(vector_norm(NormedSpace::lp(2, 1.0), x) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(vector_norm(NormedSpace::lp(2, 2.0), x) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(vector_norm(NormedSpace::lp(2, kInf), x) == 4.0);
  CHECK(vector_norm(NormedSpace::lp(2, 4.0), x) ==
        doctest::Approx(std::pow(337.0, 0.25)).epsilon(1e-15));
}

TEST_CASE("weighted norms") {
  std::vector<double> x{3.0, -4.0};
  auto w2 = NormedSpace::weighted_lp(2, 2.0, {4.0, 1.0});
  CHECK(vector_norm(w2, x) == doctest::Approx(std::sqrt(52.0)).epsilon(1e-15));
  // sup norm ignores weights (ess-sup of a step function)
  auto winf = NormedSpace::weighted_lp(2, kInf, {100.0, 0.001});
  CHECK(vector_norm(winf, x) == 4.0);
}

TEST_CASE("basis vectors") {
  auto s = NormedSpace::lp(3, 2.0);
  auto e1 = basis_vector(s, 1);
  CHECK(e1.coords == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(vector_norm(e1) == 1.0);
  CHECK_THROWS_AS(basis_vector(s, 3), InvalidParameter);
  CHECK_THROWS_AS(basis_vector(s, -1), InvalidParameter);
}

TEST_CASE("dual spaces") {
  auto d = dual_space(NormedSpace::lp(2, 4.0));
  CHECK(d.exponent == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(d.dim == 2);

  auto wd = dual_space(NormedSpace::weighted_lp(2, 3.0, {2.0, 8.0}));
  // w^{1 - p'} with p' = 3/2
  CHECK(wd.weights[0] == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-15));
  CHECK(wd.weights[1] == doctest::Approx(std::pow(8.0, -0.5)).epsilon(1e-15));

  CHECK_THROWS_AS(dual_space(NormedSpace::lp(2, 1.0)), UnsupportedDual);
  CHECK_THROWS_AS(dual_space(NormedSpace::lp(2, kInf)), UnsupportedDual);
}

TEST_CASE("spaces_equal treats empty weights as all ones") {
  CHECK(spaces_equal(NormedSpace::lp(3, 2.0), NormedSpace::weighted_lp(3, 2.0, {1.0, 1.0, 1.0})));
  CHECK_FALSE(spaces_equal(NormedSpace::lp(3, 2.0), NormedSpace::lp(3, 4.0)));
  CHECK_FALSE(
      spaces_equal(NormedSpace::lp(3, 2.0), NormedSpace::weighted_lp(3, 2.0, {1.0, 2.0, 1.0})));
}

TEST_CASE("vector_norm rejects bad input") {
  CHECK_THROWS_AS(vector_norm(NormedSpace::lp(2, 0.5), {1.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(vector_norm(NormedSpace::lp(3, 2.0), {1.0, 1.0}), DimensionError);
}

TEST_CASE("matrix basics") {
  auto I = Matrix::identity(3);
  std::vector<double> x{1.0, -2.0, 3.0};
  CHECK(matvec(I, x) == x);

  auto D = Matrix::diagonal({2.0, -3.0});
  auto y = matvec(D, {1.0, 1.0});
  CHECK(y[0] == 2.0);
  CHECK(y[1] == -3.0);
  CHECK(is_diagonal(D));

  Matrix m(2, 2);
  m.at(0, 1) = 5.0;
  CHECK_FALSE(is_diagonal(m));
  auto mt = transpose(m);
  CHECK(mt.at(1, 0) == 5.0);
  CHECK(mt.at(0, 1) == 0.0);

  auto s = mat_add(I, Matrix::identity(3), 2.0, -0.5);
  CHECK(s.at(0, 0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.at(0, 1) == 0.0);

  Matrix f(2, 2, {3.0, 4.0, 0.0, 0.0});
  CHECK(frobenius_norm(f) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("largest singular value") {
  CHECK(sigma_max(Matrix::diagonal({3.0, -4.0})) == doctest::Approx(4.0).epsilon(1e-12));
  Matrix n(2, 2, {0.0, 2.0, 0.0, 0.0});  // nilpotent, spectral radius 0
  CHECK(sigma_max(n) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("random_orthogonal is orthogonal") {
  Rng rng(7);
  auto q = random_orthogonal(5, rng);
  auto qt = transpose(q);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 5; ++k) dot += qt.at(i, k) * q.at(k, j);
      CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("fft roundtrip and identity multiplier") {
  int n = 64;
  Rng rng(11);
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);

  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft_inplace(a, false);
  fft_inplace(a, true);
  for (int i = 0; i < n; ++i) {
    CHECK(std::fabs(a[static_cast<std::size_t>(i)].real() - x[static_cast<std::size_t>(i)]) <
          1e-12);
    CHECK(std::fabs(a[static_cast<std::size_t>(i)].imag()) < 1e-12);
  }

  std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  auto y = apply_fourier_multiplier(x, 2.0, ones);
  for (int i = 0; i < n; ++i)
    CHECK(std::fabs(y[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("fft_signed_index") {
  CHECK(fft_signed_index(0, 8) == 0);
  CHECK(fft_signed_index(3, 8) == 3);
  CHECK(fft_signed_index(4, 8) == 4);
  CHECK(fft_signed_index(5, 8) == -3);
  CHECK(fft_signed_index(7, 8) == -1);
}

TEST_CASE("rng streams are reproducible") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Rng c(123), d(123);
  for (int i = 0; i < 50; ++i) {
    CHECK(c.uniform01() == d.uniform01());
    CHECK(c.normal() == d.normal());
    CHECK(c.bounded(17) == d.bounded(17));
    CHECK(c.sign() == d.sign());
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("parallel_for covers every index once") {
  int n = 1000;
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  parallel_for(n, [&](int i) { out[static_cast<std::size_t>(i)] = 3 * i + 1; });
  for (int i = 0; i < n; ++i) CHECK(out[static_cast<std::size_t>(i)] == 3 * i + 1);
  CHECK(worker_count() >= 1);
}
