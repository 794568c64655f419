#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fano {

inline int hardware_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-space map used by the claim ledger and the germ samplers. Results are
// written by index, so the output is identical whichever schedule runs; the
// serial path (threads <= 1, or builds without OpenMP) is the reference the
// tests compare against.
template <class F>
void parallel_for(size_t n, int threads, F&& body) {
#if defined(_OPENMP)
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<size_t>(i));
    return;
  }
#else
  (void)threads;
#endif
  for (size_t i = 0; i < n; ++i) body(i);
}

template <class T, class F>
std::vector<T> parallel_map(size_t n, int threads, F&& fn) {
  std::vector<T> out(n);
  parallel_for(n, threads, [&](size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace fano
