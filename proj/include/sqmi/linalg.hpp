#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sqmi {

// Dense row-major matrix. Small (d <= a few hundred); everything stays in
// cache, so no blocking.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }

  void resize_zero(std::size_t r, std::size_t c) {
    rows = r;
    cols = c;
    a.assign(r * c, 0.0);
  }

  static Matrix identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

// In-place Cholesky of a symmetric matrix (reads the lower triangle,
// overwrites it with L; the strict upper triangle is zeroed). Returns false
// on a non-positive pivot, leaving the matrix partially overwritten.
bool cholesky_lower_inplace(Matrix& m);

// x := L^{-1} x for lower-triangular L.
void solve_lower(const Matrix& chol, std::span<double> x);

// log det(L L^T) = 2 * sum log L_ii.
double log_det_from_chol(const Matrix& chol);

// ||a - b||_F; dimensions must match.
double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace sqmi
