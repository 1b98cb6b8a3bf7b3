#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "rblab/errors.hpp"
#include "rblab/rbound.hpp"
#include "rblab/spaces.hpp"

using namespace rblab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

OperatorFamily scaled_identities() {
  auto h2 = NormedSpace::lp(2, 2.0);
  return OperatorFamily{h2, h2, {Matrix::identity(2), mat_scale(Matrix::identity(2), 2.0)}};
}
}  // namespace

TEST_CASE("two scaled identities on a Euclidean plane") {
  auto fam = scaled_identities();
  RandomConfig cfg;
  cfg.restarts = 4;
  auto est = rbound_lower(fam, 4, cfg);
  double cap = hilbert_rbound_cap(fam);
  CHECK(cap == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(est.lower_bound == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(est.lower_bound <= cap + 1e-9);
  CHECK(est.ratio_evals > 0);
  // the witness reproduces the reported value
  CHECK(rbound_ratio(fam, est.witness, cfg) == doctest::Approx(est.lower_bound).epsilon(1e-12));
}

TEST_CASE("ratio hand values for a diagonal pair") {
  auto h2 = NormedSpace::lp(2, 2.0);
  OperatorFamily fam{h2, h2, {Matrix::diagonal({2.0, 1.0})}};
  RandomConfig cfg;
  Assignment a0{{0}, {basis_vector(h2, 0)}};
  CHECK(rbound_ratio(fam, a0, cfg) == doctest::Approx(2.0).epsilon(1e-12));
  Assignment a1{{0}, {basis_vector(h2, 1)}};
  CHECK(rbound_ratio(fam, a1, cfg) == doctest::Approx(1.0).epsilon(1e-12));
  Assignment both{{0, 0}, {basis_vector(h2, 0), basis_vector(h2, 1)}};
  // (E||(±2, ±1)||²)^{1/2} / (E||(±1, ±1)||²)^{1/2} = sqrt(5)/sqrt(2)
  CHECK(rbound_ratio(fam, both, cfg) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-12));
}

TEST_CASE("adjoint family transposes between duals") {
  auto dom = NormedSpace::lp(2, 3.0);
  auto cod = NormedSpace::lp(2, 2.0);
  Matrix m(2, 2, {1.0, 2.0, 3.0, 4.0});
  OperatorFamily fam{dom, cod, {m}};
  auto adj = adjoint_family(fam);
  CHECK(adj.domain.exponent == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(adj.codomain.exponent == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(adj.operators[0].at(0, 1) == 3.0);
  CHECK(adj.operators[0].at(1, 0) == 2.0);
  // transposition preserves the largest singular value
  CHECK(sigma_max(adj.operators[0]) == doctest::Approx(sigma_max(m)).epsilon(1e-9));

  OperatorFamily bad{NormedSpace::lp(2, 1.0), cod, {m}};
  CHECK_THROWS_AS(adjoint_family(bad), UnsupportedDual);
}

TEST_CASE("exhaustive strategy stays within its budget") {
  auto h2 = NormedSpace::lp(2, 2.0);
  std::vector<Matrix> many;
  for (int i = 0; i < 10; ++i) many.push_back(mat_scale(Matrix::identity(2), 1.0 + i));
  OperatorFamily big{h2, h2, many};
  RandomConfig cfg;
  CHECK_THROWS_AS(rbound_lower(big, 5, cfg, SearchStrategy::exhaustive_small), InvalidParameter);

  auto fam = scaled_identities();
  auto est = rbound_lower(fam, 2, cfg, SearchStrategy::exhaustive_small);
  // never below the best singleton: ||2I|| = 2
  CHECK(est.lower_bound >= 2.0 - 1e-9);
}

TEST_CASE("norm lower estimates hit diagonal values exactly") {
  auto s = NormedSpace::lp(2, 1.0);
  OperatorFamily fam{s, s, {Matrix::diagonal({2.0, -3.0})}};
  RandomConfig cfg;
  CHECK(uniform_norm_lower(fam, cfg) == doctest::Approx(3.0).epsilon(1e-12));

  // weighted l1 -> l1: column j scaled by w_out/w_in
  auto dw = NormedSpace::weighted_lp(2, 1.0, {1.0, 4.0});
  auto cw = NormedSpace::weighted_lp(2, 1.0, {1.0, 3.0});
  OperatorFamily wfam{dw, cw, {Matrix::diagonal({2.0, 1.0})}};
  CHECK(uniform_norm_lower(wfam, cfg) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("column bound is exact from l1") {
  Matrix m(2, 2, {1.0, -2.0, 0.0, 5.0});
  auto dom = NormedSpace::lp(2, 1.0);
  auto cod = NormedSpace::lp(2, 2.0);
  // columns (1,0) and (-2,5); norms 1, sqrt(29); sup over columns
  CHECK(operator_norm_upper(m, dom, cod) == doctest::Approx(std::sqrt(29.0)).epsilon(1e-12));
}

TEST_CASE("degenerate inputs are rejected") {
  auto fam = scaled_identities();
  RandomConfig cfg;
  auto h2 = fam.domain;
  Assignment zero{{0, 1}, {make_vector(h2, {0.0, 0.0}), make_vector(h2, {0.0, 0.0})}};
  CHECK_THROWS_AS(rbound_ratio(fam, zero, cfg), DegenerateInput);
  OperatorFamily empty{h2, h2, {}};
  CHECK_THROWS_AS(rbound_lower(empty, 2, cfg), InvalidParameter);
  Assignment mismatch{{0}, {}};
  CHECK_THROWS_AS(rbound_ratio(fam, mismatch, cfg), DimensionError);
}

TEST_CASE("random strategy is deterministic and budget-monotone") {
  auto fam = scaled_identities();
  RandomConfig cfg;
  cfg.samples = 100;
  auto a = rbound_lower(fam, 3, cfg, SearchStrategy::random);
  auto b = rbound_lower(fam, 3, cfg, SearchStrategy::random);
  CHECK(a.lower_bound == b.lower_bound);

  RandomConfig more = cfg;
  more.samples = 200;
  auto c = rbound_lower(fam, 3, more, SearchStrategy::random);
  CHECK(c.lower_bound >= a.lower_bound);
}

TEST_CASE("hilbert cap requires Euclidean exponents") {
  auto s = NormedSpace::lp(2, 4.0);
  OperatorFamily fam{s, s, {Matrix::identity(2)}};
  CHECK_THROWS_AS(hilbert_rbound_cap(fam), InvalidParameter);
  (void)kInf;
}
