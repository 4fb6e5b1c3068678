#ifndef POLYCONV_PARALLEL_HPP
#define POLYCONV_PARALLEL_HPP

#include <cstddef>

#ifdef POLYCONV_HAVE_OPENMP
#include <omp.h>
#endif

namespace polyconv {

// Index-parallel loop over [0, n). Each index writes only its own output
// slot, so the parallel kernels are bitwise identical to their serial
// reference twins. Bodies must not throw.
template <class F>
void parallel_for_index(std::ptrdiff_t n, F&& body) {
#ifdef POLYCONV_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#endif
}

template <class F>
void serial_for_index(std::ptrdiff_t n, F&& body) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

inline int parallel_thread_count() {
#ifdef POLYCONV_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace polyconv

#endif
