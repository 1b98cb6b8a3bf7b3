#include "rblab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rblab/errors.hpp"
#include "rblab/parallel.hpp"
#include "rblab/rbound.hpp"

namespace rblab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double matrix_op_norm(const Matrix& m, const NormedSpace& dom, const NormedSpace& cod,
                      bool exact_only) {
  if (exact_only && !(dom.is_hilbert() && cod.is_hilbert()) &&
      !(is_diagonal(m) && dom.exponent == cod.exponent))
    throw InvalidParameter("operator grid: exact norm requested but no exact case applies");
  OperatorFamily fam{dom, cod, {m}};
  return uniform_norm_lower(fam, RandomConfig{});
}

}  // namespace

int GridFunction::n() const {
  switch (kind) {
    case ValueKind::scalar: return static_cast<int>(scalars.size());
    case ValueKind::vector: return static_cast<int>(vectors.size());
    case ValueKind::matrix: return static_cast<int>(matrices.size());
  }
  return 0;
}

void GridFunction::validate() const {
  if (!(a < b)) throw InvalidParameter("grid function: need a < b");
  if (n() < 2) throw InvalidParameter("grid function: need at least 2 samples");
  if (kind == ValueKind::vector) {
    for (const auto& v : vectors)
      if (!spaces_equal(v.space, vectors.front().space))
        throw DimensionError("grid function: samples live in different spaces");
  }
  if (kind == ValueKind::matrix) {
    for (const auto& m : matrices)
      if (m.rows != codomain.dim || m.cols != domain.dim)
        throw DimensionError("grid function: matrix shape does not match declared spaces");
  }
}

GridFunction make_scalar_grid(double a, double b, std::vector<double> values) {
  GridFunction f;
  f.a = a;
  f.b = b;
  f.kind = ValueKind::scalar;
  f.scalars = std::move(values);
  f.validate();
  return f;
}

GridFunction make_vector_grid(double a, double b, std::vector<Vector> values) {
  GridFunction f;
  f.a = a;
  f.b = b;
  f.kind = ValueKind::vector;
  f.vectors = std::move(values);
  f.validate();
  return f;
}

GridFunction make_operator_grid(double a, double b, std::vector<Matrix> values,
                                const NormedSpace& domain, const NormedSpace& codomain) {
  GridFunction f;
  f.a = a;
  f.b = b;
  f.kind = ValueKind::matrix;
  f.matrices = std::move(values);
  f.domain = domain;
  f.codomain = codomain;
  f.validate();
  return f;
}

double grid_value_norm(const GridFunction& f, int i) {
  auto idx = static_cast<std::size_t>(i);
  switch (f.kind) {
    case ValueKind::scalar: return std::fabs(f.scalars[idx]);
    case ValueKind::vector: return vector_norm(f.vectors[idx]);
    case ValueKind::matrix:
      return matrix_op_norm(f.matrices[idx], f.domain, f.codomain, f.exact_norms);
  }
  return 0.0;
}

double grid_diff_norm(const GridFunction& f, int i, int j) {
  auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
  switch (f.kind) {
    case ValueKind::scalar: return std::fabs(f.scalars[jj] - f.scalars[ii]);
    case ValueKind::vector: {
      Vector d = f.vectors[jj];
      for (std::size_t k = 0; k < d.coords.size(); ++k) d.coords[k] -= f.vectors[ii].coords[k];
      return vector_norm(d);
    }
    case ValueKind::matrix: {
      Matrix d = mat_add(f.matrices[jj], f.matrices[ii], 1.0, -1.0);
      return matrix_op_norm(d, f.domain, f.codomain, f.exact_norms);
    }
  }
  return 0.0;
}

double grid_lp_norm(const GridFunction& f, double p) {
  f.validate();
  if (!(p >= 1.0)) throw InvalidParameter("grid L^p norm: p must be >= 1");
  const int n = f.n();
  if (p == kInf) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, grid_value_norm(f, i));
    return m;
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::pow(grid_value_norm(f, i), p);
  return std::pow(acc * f.step(), 1.0 / p);
}

namespace {

// L^p norm of f(. + k*step) - f(.) for one positive grid shift.
double shift_diff_norm(const GridFunction& f, int k, double p, ModulusConvention convention,
                       bool shift_left) {
  const int n = f.n();
  const double delta = f.step();
  double acc = 0.0;
  double mx = 0.0;
  auto feed = [&](double d) {
    if (p == kInf)
      mx = std::max(mx, d);
    else
      acc += std::pow(d, p);
  };
  // overlap pairs (i, i+k) are shared by both conventions and both signs
  for (int i = 0; i + k < n; ++i) feed(grid_diff_norm(f, i, i + k));
  if (convention == ModulusConvention::zero_extend) {
    // cells where the translate is zero: the trailing k cells for a right
    // shift, the leading k cells for a left shift
    int lo = shift_left ? 0 : std::max(0, n - k);
    int hi = shift_left ? std::min(k, n) : n;
    for (int i = lo; i < hi; ++i) feed(grid_value_norm(f, i));
  }
  return (p == kInf) ? mx : std::pow(acc * delta, 1.0 / p);
}

}  // namespace

double modulus_rho(const GridFunction& f, double t, double p, ModulusConvention convention) {
  f.validate();
  if (!(t > 0.0)) throw InvalidParameter("modulus: t must be positive");
  if (!(p >= 1.0)) throw InvalidParameter("modulus: p must be >= 1");
  const int n = f.n();
  const double delta = f.step();
  int kmax = static_cast<int>(std::floor(t / delta * (1.0 + 1e-12)));
  if (kmax < 1) kmax = 1;  // below one grid step: one-step value
  // beyond the interval length the translate no longer overlaps
  int cap = (convention == ModulusConvention::restrict) ? n - 1 : n;
  kmax = std::min(kmax, cap);
  double best = 0.0;
  for (int k = 1; k <= kmax; ++k) {
    best = std::max(best, shift_diff_norm(f, k, p, convention, false));
    if (convention == ModulusConvention::zero_extend)
      best = std::max(best, shift_diff_norm(f, k, p, convention, true));
    // restrict: the +h and -h values coincide (same pair set)
  }
  return best;
}

void BesovParams::validate() const {
  if (!(s > 0.0 && s < 1.0)) throw InvalidParameter("besov: s must lie in (0, 1)");
  if (!(p >= 1.0)) throw InvalidParameter("besov: p must be >= 1");
  if (!(q >= 1.0)) throw InvalidParameter("besov: q must be >= 1");
  if (levels < 0) throw InvalidParameter("besov: levels must be >= 0");
}

double lambda_besov_norm(const GridFunction& f, const BesovParams& params) {
  f.validate();
  params.validate();
  double base = grid_lp_norm(f, params.p);
  const int J = params.levels;
  std::vector<double> terms(static_cast<std::size_t>(J + 1));
  parallel_for(J + 1, [&](int j) {
    double t = std::ldexp(1.0, -j);  // 2^{-j}
    double rho = modulus_rho(f, t, params.p, params.convention);
    terms[static_cast<std::size_t>(j)] = std::pow(2.0, j * params.s) * rho;
  });
  double semi;
  if (params.q == kInf) {
    semi = *std::max_element(terms.begin(), terms.end());
  } else {
    double acc = 0.0;
    for (double term : terms) acc += std::pow(term, params.q);
    semi = std::pow(acc * std::log(2.0), 1.0 / params.q);
  }
  return base + semi;
}

HolderReport holder_hypothesis_check(const GridFunction& f, double alpha, double r, double A) {
  f.validate();
  if (!(r >= 1.0)) throw InvalidParameter("holder check: r must be >= 1");
  if (!(alpha > 1.0 / r && alpha < 1.0))
    throw InvalidParameter("holder check: alpha must lie in (1/r, 1)");
  if (A < 0.0) throw InvalidParameter("holder check: A must be nonnegative");

  HolderReport rep;
  rep.alpha = alpha;
  rep.r = r;
  rep.A = A;

  const int n = f.n();
  const double delta = f.step();
  // worst pair per shift keeps the scan cheap and the report small
  for (int k = 1; k < n; ++k) {
    double h = k * delta;
    double allowed = A * std::pow(h, alpha);
    double worst = -1.0;
    int worst_i = -1;
    for (int i = 0; i + k < n; ++i) {
      double d = grid_diff_norm(f, i, i + k);
      if (d > allowed && d - allowed > worst) {
        worst = d - allowed;
        worst_i = i;
      }
    }
    if (worst_i >= 0 && rep.violations.size() < 16) {
      rep.violations.push_back(HolderViolation{f.sample_point(worst_i), h,
                                               grid_diff_norm(f, worst_i, worst_i + k), allowed});
    }
  }
  rep.holds = rep.violations.empty();

  BesovParams params;
  params.s = 1.0 / r;
  params.p = r;
  params.q = 1.0;
  params.convention = ModulusConvention::restrict;
  rep.besov_norm = lambda_besov_norm(f, params);
  rep.lr_norm = grid_lp_norm(f, r);
  double denom = A + rep.lr_norm;
  rep.bound_ratio = (denom > 0.0) ? rep.besov_norm / denom : 0.0;
  return rep;
}

}  // namespace rblab
