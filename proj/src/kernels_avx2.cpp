#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "sqmi/kernels.hpp"

// AVX2 backend. Four ymm accumulators implement the canonical 16-lane
// scheme; multiplies and adds stay separate (no FMA) so results are
// bit-identical to the scalar reference.

namespace sqmi::kernels {
namespace {

inline double hsum(__m256d acc0, __m256d acc1, __m256d acc2, __m256d acc3) {
  const __m256d w = _mm256_add_pd(_mm256_add_pd(acc0, acc2), _mm256_add_pd(acc1, acc3));
  const __m128d lo = _mm256_castpd256_pd128(w);
  const __m128d hi = _mm256_extractf128_pd(w, 1);
  const __m128d s = _mm_add_pd(lo, hi);  // {w0+w2, w1+w3}
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8)));
    acc3 = _mm256_add_pd(acc3, _mm256_mul_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12)));
  }
  double r = hsum(acc0, acc1, acc2, acc3);
  for (std::size_t i = main; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    acc2 = _mm256_add_pd(acc2, _mm256_loadu_pd(x + i + 8));
    acc3 = _mm256_add_pd(acc3, _mm256_loadu_pd(x + i + 12));
  }
  double r = hsum(acc0, acc1, acc2, acc3);
  for (std::size_t i = main; i < n; ++i) r += x[i];
  return r;
}

double sumsq_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    const __m256d v1 = _mm256_loadu_pd(x + i + 4);
    const __m256d v2 = _mm256_loadu_pd(x + i + 8);
    const __m256d v3 = _mm256_loadu_pd(x + i + 12);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v0, v0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(v1, v1));
    acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(v2, v2));
    acc3 = _mm256_add_pd(acc3, _mm256_mul_pd(v3, v3));
  }
  double r = hsum(acc0, acc1, acc2, acc3);
  for (std::size_t i = main; i < n; ++i) r += x[i] * x[i];
  return r;
}

double sumsq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  const std::size_t main = n - n % 16;
  for (std::size_t i = 0; i < main; i += 16) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    const __m256d d2 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8));
    const __m256d d3 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
    acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(d2, d2));
    acc3 = _mm256_add_pd(acc3, _mm256_mul_pd(d3, d3));
  }
  double r = hsum(acc0, acc1, acc2, acc3);
  for (std::size_t i = main; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (std::size_t i = main; i < n; ++i) y[i] += a * x[i];
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t n) {
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (std::size_t i = main; i < n; ++i) out[i] = a[i] - b[i];
}

void accumulate_avx2(double* acc, const double* x, std::size_t n) {
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (std::size_t i = main; i < n; ++i) acc[i] += x[i];
}

void accumulate_sq_avx2(double* acc, const double* x, std::size_t n) {
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_mul_pd(v, v)));
  }
  for (std::size_t i = main; i < n; ++i) acc[i] += x[i] * x[i];
}

}  // namespace

namespace detail {
const KernelTable avx2_table = {
    dot_avx2,  sum_avx2, sumsq_avx2,      sumsq_diff_avx2,
    axpy_avx2, sub_avx2, accumulate_avx2, accumulate_sq_avx2,
};
}  // namespace detail

}  // namespace sqmi::kernels

#endif  // x86_64
