#include "sqmi/kernels.hpp"

// Reference backend. The 16-lane accumulator layout deliberately mirrors the
// SIMD register blocking (4 lanes per vector, 4 vectors) so the SIMD
// backends can reproduce these results bit for bit.

namespace sqmi::kernels {
namespace {

constexpr std::size_t kLanes = 16;

inline double combine_lanes(const double* l) {
  double w0 = (l[0] + l[8]) + (l[4] + l[12]);
  double w1 = (l[1] + l[9]) + (l[5] + l[13]);
  double w2 = (l[2] + l[10]) + (l[6] + l[14]);
  double w3 = (l[3] + l[11]) + (l[7] + l[15]);
  return (w0 + w2) + (w1 + w3);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double lane[kLanes] = {};
  const std::size_t main = n - n % kLanes;
  for (std::size_t i = 0; i < main; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) lane[j] += a[i + j] * b[i + j];
  }
  double r = combine_lanes(lane);
  for (std::size_t i = main; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_scalar(const double* x, std::size_t n) {
  double lane[kLanes] = {};
  const std::size_t main = n - n % kLanes;
  for (std::size_t i = 0; i < main; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) lane[j] += x[i + j];
  }
  double r = combine_lanes(lane);
  for (std::size_t i = main; i < n; ++i) r += x[i];
  return r;
}

double sumsq_scalar(const double* x, std::size_t n) {
  double lane[kLanes] = {};
  const std::size_t main = n - n % kLanes;
  for (std::size_t i = 0; i < main; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) lane[j] += x[i + j] * x[i + j];
  }
  double r = combine_lanes(lane);
  for (std::size_t i = main; i < n; ++i) r += x[i] * x[i];
  return r;
}

double sumsq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double lane[kLanes] = {};
  const std::size_t main = n - n % kLanes;
  for (std::size_t i = 0; i < main; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) {
      const double d = a[i + j] - b[i + j];
      lane[j] += d * d;
    }
  }
  double r = combine_lanes(lane);
  for (std::size_t i = main; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void accumulate_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void accumulate_sq_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * x[i];
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    dot_scalar,        sum_scalar, sumsq_scalar,      sumsq_diff_scalar,
    axpy_scalar,       sub_scalar, accumulate_scalar, accumulate_sq_scalar,
};
}  // namespace detail

}  // namespace sqmi::kernels
