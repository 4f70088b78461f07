#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#if defined(GAMMACAT_HAVE_OPENMP)
#include <omp.h>
#endif

// Corpus sweeps: every heavy check in the toolkit is a loop over
// independent problems (functors, based maps, fragment objects).  The
// parallel path runs the loop body under OpenMP; the serial path is the
// reference implementation the tests compare against.  Each index writes
// only its own slot, so both paths produce identical results.

namespace sweep {

enum class Mode { Serial, Parallel };

inline bool openmp_enabled() {
#if defined(GAMMACAT_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

// Applies fn to 0..count-1 and collects the results in index order.
template <typename T>
std::vector<T> map_indexed(long count, Mode mode, const std::function<T(long)>& fn) {
  std::vector<T> out(static_cast<size_t>(count));
  if (mode == Mode::Parallel && openmp_enabled()) {
#if defined(GAMMACAT_HAVE_OPENMP)
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        out[static_cast<size_t>(i)] = fn(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
#endif
  } else {
    for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
  }
  return out;
}

// Convenience for pass/fail sweeps: returns the failing indices, in order.
inline std::vector<long> failing_indices(long count, Mode mode, const std::function<bool(long)>& fn) {
  auto flags = map_indexed<char>(count, mode, [&](long i) { return static_cast<char>(fn(i) ? 1 : 0); });
  std::vector<long> out;
  for (long i = 0; i < count; ++i)
    if (!flags[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace sweep
