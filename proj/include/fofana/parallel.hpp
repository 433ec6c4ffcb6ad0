#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fofana::par {

// Thread count used by parallel loops; 0 means "the OpenMP default".
void set_threads(int n);
int configured_threads();
int effective_threads();

// Parallel loop over [0, n). Every iteration writes only its own output slot,
// so the result is identical for any thread count and schedule.
template <typename F>
void for_each_index(std::int64_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace fofana::par
