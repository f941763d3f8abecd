#include "adhdx/core/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adhdx::par {

namespace {
std::atomic<bool> g_enabled{true};
}

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

void set_threads(int n) {
  if (n <= 1) {
    set_enabled(false);
    return;
  }
  set_enabled(true);
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace adhdx::par
