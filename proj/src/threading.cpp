#include "sqmi/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sqmi {
namespace {

std::size_t& configured() {
  static std::size_t n = 0;  // 0 = unresolved
  return n;
}

std::size_t resolve() {
  if (const char* env = std::getenv("SQMI_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

std::size_t thread_count() {
  if (configured() == 0) configured() = resolve();
  return configured();
}

void set_thread_count(std::size_t n) { configured() = n ? n : resolve(); }

std::size_t max_workers() { return thread_count(); }

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (end <= begin) return;
  const std::size_t n = end - begin;
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = begin; i < n + begin; ++i) fn(i, 0);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      // Static block partition: worker w owns [begin + w*chunk, ...).
      const std::size_t chunk = n / workers;
      const std::size_t extra = n % workers;
      const std::size_t lo = begin + w * chunk + std::min(w, extra);
      const std::size_t hi = lo + chunk + (w < extra ? 1 : 0);
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sqmi
