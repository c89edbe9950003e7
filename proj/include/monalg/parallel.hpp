#pragma once

#include <atomic>
#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monalg {

enum class exec_mode { serial, parallel };

namespace detail {
inline std::atomic<exec_mode> g_exec_mode{exec_mode::parallel};
}

// Process-wide switch for the data-parallel kernels (suite loops, tree level
// expansion, per-level factorizations). Both paths produce identical results;
// tests compare them and the benchmark times them.
inline exec_mode execution_mode() { return detail::g_exec_mode.load(); }
inline void set_execution_mode(exec_mode m) { detail::g_exec_mode.store(m); }

// Runs fn(i) for i in [0, n). In parallel mode the iterations may run
// concurrently; the first thrown exception is rethrown after the loop.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  if (n == 0) return;
#ifdef _OPENMP
  if (execution_mode() == exec_mode::parallel) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(monalg_parallel_for_error)
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace monalg
