#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rblab/random.hpp"

namespace rblab {

// Dense row-major matrix. Small sizes only (everything here is desk scale).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // rows*cols, row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  Matrix(int r, int c, std::vector<double> entries) : rows(r), cols(c), a(std::move(entries)) {}

  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
  static Matrix diagonal(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);
Matrix transpose(const Matrix& m);
Matrix mat_add(const Matrix& x, const Matrix& y, double sx = 1.0, double sy = 1.0);
Matrix mat_scale(const Matrix& x, double s);
double frobenius_norm(const Matrix& m);

// True if off-diagonal entries are all exactly zero.
bool is_diagonal(const Matrix& m);

// Largest singular value, via cyclic Jacobi on the smaller Gram matrix.
// Converges to machine precision for the small dense matrices used here.
double sigma_max(const Matrix& m);

// Haar-ish random orthogonal matrix: Gaussian entries + Gram-Schmidt with
// re-orthogonalization. Deterministic given the Rng state.
Matrix random_orthogonal(int n, Rng& rng);

}  // namespace rblab
