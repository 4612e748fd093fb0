#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include "sqmi/kernels.hpp"

// NEON backend. Eight 2-lane registers implement the canonical 16-lane
// scheme (register k holds lanes 2k and 2k+1); multiply and add stay
// separate so results match the scalar reference bit for bit.

namespace sqmi::kernels {
namespace {

struct Acc16 {
  float64x2_t q[8];
};

inline Acc16 zero_acc() {
  Acc16 a;
  for (int k = 0; k < 8; ++k) a.q[k] = vdupq_n_f64(0.0);
  return a;
}

inline double combine(const Acc16& a) {
  // w[j] = (l[j] + l[8+j]) + (l[4+j] + l[12+j]), then (w0+w2)+(w1+w3).
  const float64x2_t w01 = vaddq_f64(vaddq_f64(a.q[0], a.q[4]), vaddq_f64(a.q[2], a.q[6]));
  const float64x2_t w23 = vaddq_f64(vaddq_f64(a.q[1], a.q[5]), vaddq_f64(a.q[3], a.q[7]));
  const float64x2_t s = vaddq_f64(w01, w23);  // {w0+w2, w1+w3}
  return vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  Acc16 acc = zero_acc();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    for (int k = 0; k < 8; ++k) {
      const float64x2_t va = vld1q_f64(a + i + 2 * k);
      const float64x2_t vb = vld1q_f64(b + i + 2 * k);
      acc.q[k] = vaddq_f64(acc.q[k], vmulq_f64(va, vb));
    }
  }
  double r = combine(acc);
  for (std::size_t i = main; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_neon(const double* x, std::size_t n) {
  Acc16 acc = zero_acc();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    for (int k = 0; k < 8; ++k) acc.q[k] = vaddq_f64(acc.q[k], vld1q_f64(x + i + 2 * k));
  }
  double r = combine(acc);
  for (std::size_t i = main; i < n; ++i) r += x[i];
  return r;
}

double sumsq_neon(const double* x, std::size_t n) {
  Acc16 acc = zero_acc();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    for (int k = 0; k < 8; ++k) {
      const float64x2_t v = vld1q_f64(x + i + 2 * k);
      acc.q[k] = vaddq_f64(acc.q[k], vmulq_f64(v, v));
    }
  }
  double r = combine(acc);
  for (std::size_t i = main; i < n; ++i) r += x[i] * x[i];
  return r;
}

double sumsq_diff_neon(const double* a, const double* b, std::size_t n) {
  Acc16 acc = zero_acc();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    for (int k = 0; k < 8; ++k) {
      const float64x2_t d = vsubq_f64(vld1q_f64(a + i + 2 * k), vld1q_f64(b + i + 2 * k));
      acc.q[k] = vaddq_f64(acc.q[k], vmulq_f64(d, d));
    }
  }
  double r = combine(acc);
  for (std::size_t i = main; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const std::size_t main = n - n % 2;
  for (std::size_t i = 0; i < main; i += 2) {
    const float64x2_t prod = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (std::size_t i = main; i < n; ++i) y[i] += a * x[i];
}

void sub_neon(const double* a, const double* b, double* out, std::size_t n) {
  const std::size_t main = n - n % 2;
  for (std::size_t i = 0; i < main; i += 2) {
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (std::size_t i = main; i < n; ++i) out[i] = a[i] - b[i];
}

void accumulate_neon(double* acc, const double* x, std::size_t n) {
  const std::size_t main = n - n % 2;
  for (std::size_t i = 0; i < main; i += 2) {
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  }
  for (std::size_t i = main; i < n; ++i) acc[i] += x[i];
}

void accumulate_sq_neon(double* acc, const double* x, std::size_t n) {
  const std::size_t main = n - n % 2;
  for (std::size_t i = 0; i < main; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vmulq_f64(v, v)));
  }
  for (std::size_t i = main; i < n; ++i) acc[i] += x[i] * x[i];
}

}  // namespace

namespace detail {
const KernelTable neon_table = {
    dot_neon,  sum_neon, sumsq_neon,      sumsq_diff_neon,
    axpy_neon, sub_neon, accumulate_neon, accumulate_sq_neon,
};
}  // namespace detail

}  // namespace sqmi::kernels

#endif  // aarch64
