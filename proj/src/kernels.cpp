#include "sqmi/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sqmi::kernels {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
      return true;  // NEON is baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  switch (b) {
    case Backend::scalar:
      return detail::scalar_table;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (backend_supported(Backend::avx2)) return detail::avx2_table;
#endif
      break;
    case Backend::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
      return detail::neon_table;
#endif
      break;
  }
  throw std::runtime_error(std::string("kernel backend not supported on this CPU: ") +
                           backend_name(b));
}

namespace {

Backend resolve_backend() {
  const char* env = std::getenv("SQMI_KERNELS");
  const std::string req = env ? env : "auto";
  if (req == "scalar") return Backend::scalar;
  if (req == "avx2" && backend_supported(Backend::avx2)) return Backend::avx2;
  if (req == "neon" && backend_supported(Backend::neon)) return Backend::neon;
  // auto (or an unsupported explicit request): best available
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  if (backend_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

const KernelTable& active() {
  static const KernelTable& t = table(resolve_backend());
  return t;
}

}  // namespace

Backend active_backend() {
  static const Backend b = resolve_backend();
  return b;
}

double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
double sum(const double* x, std::size_t n) { return active().sum(x, n); }
double sumsq(const double* x, std::size_t n) { return active().sumsq(x, n); }
double sumsq_diff(const double* a, const double* b, std::size_t n) {
  return active().sumsq_diff(a, b, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
void sub(const double* a, const double* b, double* out, std::size_t n) {
  active().sub(a, b, out, n);
}
void accumulate(double* acc, const double* x, std::size_t n) { active().accumulate(acc, x, n); }
void accumulate_sq(double* acc, const double* x, std::size_t n) {
  active().accumulate_sq(acc, x, n);
}

}  // namespace sqmi::kernels
