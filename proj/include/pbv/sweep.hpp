#pragma once

#include <cstdlib>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pbv::sweep {

// Deterministic data-parallel map over [0, n): results land in slot order no
// matter how iterations are scheduled, so the parallel kernel and the serial
// reference are interchangeable bit for bit. Exceptions are re-thrown for the
// lowest failing index.

inline int worker_count() {
    if (const char* env = std::getenv("PBV_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class R, class Fn>
std::vector<R> map_serial(size_t n, Fn&& fn) {
    std::vector<R> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

template <class R, class Fn>
std::vector<R> map_parallel(size_t n, Fn&& fn) {
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errs(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            out[static_cast<size_t>(i)] = fn(static_cast<size_t>(i));
        } catch (...) {
            errs[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (errs[i]) std::rethrow_exception(errs[i]);
    return out;
}

template <class R, class Fn>
std::vector<R> map_indexed(size_t n, Fn&& fn, bool parallel) {
    return parallel ? map_parallel<R>(n, fn) : map_serial<R>(n, fn);
}

}  // namespace pbv::sweep
