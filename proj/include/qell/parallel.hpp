#pragma once

#include <cstddef>

namespace qell {

// Process-wide switch between the OpenMP kernels and the serial reference
// path. Tests flip it to compare both on identical inputs.
inline bool& parallel_enabled() {
  static bool on = true;
  return on;
}

// Runs fn(0) .. fn(n-1); iterations must be independent and write only to
// their own output slots. Falls back to a plain loop without OpenMP.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
#ifdef QELL_HAVE_OPENMP
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i)
      fn(static_cast<size_t>(i));
    return;
  }
#endif
  for (size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace qell
