#pragma once

#include <cstddef>
#include <functional>

namespace sqmi {

// Worker-pool size used by parallel_for. Order of precedence: explicit
// set_thread_count (CLI --threads), SQMI_THREADS env, hardware concurrency.
// A hint only: results are byte-identical for any value.
std::size_t thread_count();
void set_thread_count(std::size_t n);

// Runs fn(i, worker) for i in [begin, end) on a static partition. Each index
// is processed exactly once; workers get ids in [0, workers()). fn must
// write only to index-owned slots. Exceptions propagate (first one wins).
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn);

// Upper bound on worker ids parallel_for may use (for sizing scratch pools).
std::size_t max_workers();

}  // namespace sqmi
