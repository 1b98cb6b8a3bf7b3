#include "rblab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rblab/errors.hpp"

namespace rblab {

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.cols)
    throw DimensionError("matvec: vector length does not match matrix columns");
  std::vector<double> y(static_cast<std::size_t>(m.rows), 0.0);
  for (int r = 0; r < m.rows; ++r) {
    double acc = 0.0;
    const double* row = m.a.data() + static_cast<std::size_t>(r) * m.cols;
    for (int c = 0; c < m.cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Matrix mat_add(const Matrix& x, const Matrix& y, double sx, double sy) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("mat_add: shape mismatch");
  Matrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = sx * x.a[i] + sy * y.a[i];
  return out;
}

Matrix mat_scale(const Matrix& x, double s) {
  Matrix out = x;
  for (double& v : out.a) v *= s;
  return out;
}

double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (double v : m.a) acc += v * v;
  return std::sqrt(acc);
}

bool is_diagonal(const Matrix& m) {
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (r != c && m.at(r, c) != 0.0) return false;
  return true;
}

namespace {

// Cyclic Jacobi for a symmetric matrix; returns the largest eigenvalue.
double jacobi_lambda_max(Matrix s) {
  int n = s.rows;
  if (n == 1) return s.at(0, 0);
  double scale = 0.0;
  for (double v : s.a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::fabs(s.at(p, q));
    if (off <= 1e-15 * scale * n) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = s.at(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int k = 0; k < n; ++k) {
          double skp = s.at(k, p), skq = s.at(k, q);
          s.at(k, p) = c * skp - sn * skq;
          s.at(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          double spk = s.at(p, k), sqk = s.at(q, k);
          s.at(p, k) = c * spk - sn * sqk;
          s.at(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }
  double lmax = s.at(0, 0);
  for (int i = 1; i < n; ++i) lmax = std::max(lmax, s.at(i, i));
  return lmax;
}

}  // namespace

double sigma_max(const Matrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  // Gram matrix on the smaller side.
  bool wide = m.cols > m.rows;
  int n = wide ? m.rows : m.cols;
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      if (wide) {
        for (int k = 0; k < m.cols; ++k) acc += m.at(i, k) * m.at(j, k);
      } else {
        for (int k = 0; k < m.rows; ++k) acc += m.at(k, i) * m.at(k, j);
      }
      g.at(i, j) = acc;
      g.at(j, i) = acc;
    }
  }
  double lmax = jacobi_lambda_max(g);
  return std::sqrt(std::max(lmax, 0.0));
}

Matrix random_orthogonal(int n, Rng& rng) {
  Matrix q(n, n);
  for (double& v : q.a) v = rng.normal();
  // Gram-Schmidt on rows, one re-orthogonalization pass for stability.
  for (int r = 0; r < n; ++r) {
    double* row = q.a.data() + static_cast<std::size_t>(r) * n;
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < r; ++prev) {
        const double* u = q.a.data() + static_cast<std::size_t>(prev) * n;
        double dot = 0.0;
        for (int c = 0; c < n; ++c) dot += row[c] * u[c];
        for (int c = 0; c < n; ++c) row[c] -= dot * u[c];
      }
    }
    double norm = 0.0;
    for (int c = 0; c < n; ++c) norm += row[c] * row[c];
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      // Astronomically unlikely; fall back to a basis direction.
      for (int c = 0; c < n; ++c) row[c] = (c == r) ? 1.0 : 0.0;
    } else {
      for (int c = 0; c < n; ++c) row[c] /= norm;
    }
  }
  return q;
}

}  // namespace rblab
