#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops behind the estimator and attack math.
//
// Every reduction kernel follows one canonical accumulation scheme so that
// all backends return identical bits:
//   - elements are processed in blocks of 16; element 16*b + j feeds lane j;
//   - lanes are combined as w[j] = (l[j] + l[8+j]) + (l[4+j] + l[12+j]) for
//     j in 0..3, then ((w0 + w2) + (w1 + w3));
//   - leftover elements (< 16) are added left to right after the combine.
// Element-wise kernels perform one multiply and one add per element (no FMA
// contraction), which is already rounding-identical across backends. The
// whole library is compiled with -ffp-contract=off to keep the scalar
// reference honest.

namespace sqmi::kernels {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

// True if the backend can run on this CPU (scalar always can).
bool backend_supported(Backend b);

// Backend used by the free functions below. Resolved once per process:
// SQMI_KERNELS={auto,scalar,avx2,neon} overrides; unsupported requests fall
// back to scalar. Since backends are bit-identical this only affects speed.
Backend active_backend();

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*sumsq_diff)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);          // y += a*x
  void (*sub)(const double*, const double*, double*, std::size_t);    // out = a - b
  void (*accumulate)(double*, const double*, std::size_t);            // acc += x
  void (*accumulate_sq)(double*, const double*, std::size_t);         // acc += x*x
};

// Table for an explicit backend (tests exercise scalar vs SIMD equivalence
// through this). Throws std::runtime_error if unsupported on this CPU.
const KernelTable& table(Backend b);

double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double sumsq_diff(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void accumulate(double* acc, const double* x, std::size_t n);
void accumulate_sq(double* acc, const double* x, std::size_t n);

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace sqmi::kernels
