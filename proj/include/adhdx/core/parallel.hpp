#pragma once

#include <cstdint>
#include <exception>
#include <utility>

namespace adhdx::par {

// Global switch between the OpenMP kernels and their serial references.
// Every parallel loop in the library distributes independent cells whose
// per-cell arithmetic order is fixed, so both modes produce bitwise
// identical results; tests assert that.
bool enabled();
void set_enabled(bool on);
int max_threads();
void set_threads(int n);  // n <= 1 switches to serial mode

template <class F>
void parallel_for(std::int64_t n, F&& body) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(adhdx_parallel_for_error)
        {
          if (!error) error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace adhdx::par
