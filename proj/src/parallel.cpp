#include "fofana/parallel.hpp"

namespace fofana::par {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
  g_threads = n > 0 ? n : 0;
#ifdef _OPENMP
  if (g_threads > 0) omp_set_num_threads(g_threads);
#endif
}

int configured_threads() { return g_threads; }

int effective_threads() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fofana::par
