#include "sqmi/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "sqmi/kernels.hpp"

namespace sqmi {

bool cholesky_lower_inplace(Matrix& m) {
  const std::size_t d = m.rows;
  if (m.cols != d) throw std::invalid_argument("cholesky: matrix not square");
  for (std::size_t i = 0; i < d; ++i) {
    double* li = m.row(i);
    for (std::size_t j = 0; j <= i; ++j) {
      const double s = m.at(i, j) - kernels::dot(li, m.row(j), j);
      if (i == j) {
        if (!(s > 0.0) || !std::isfinite(s)) return false;
        li[i] = std::sqrt(s);
      } else {
        li[j] = s / m.at(j, j);
      }
    }
    for (std::size_t j = i + 1; j < d; ++j) li[j] = 0.0;
  }
  return true;
}

void solve_lower(const Matrix& chol, std::span<double> x) {
  const std::size_t d = chol.rows;
  for (std::size_t i = 0; i < d; ++i) {
    const double s = x[i] - kernels::dot(chol.row(i), x.data(), i);
    x[i] = s / chol.at(i, i);
  }
}

double log_det_from_chol(const Matrix& chol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < chol.rows; ++i) acc += std::log(chol.at(i, i));
  return 2.0 * acc;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  return std::sqrt(kernels::sumsq_diff(a.a.data(), b.a.data(), a.a.size()));
}

}  // namespace sqmi
