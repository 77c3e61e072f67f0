#pragma once

#include <cstddef>
#include <cstdlib>
#include <algorithm>

#include <omp.h>

namespace ineq::par {

/// Which execution path a kernel takes. Every parallel kernel keeps a serial
/// twin; results must agree bit for bit because workers only write disjoint
/// slots and every reduction is an indexed serial fold afterwards.
enum class Exec { serial, openmp };

/// Worker cap: min(OMP max threads, INEQ_FORGE_THREADS if set).
inline int max_threads() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("INEQ_FORGE_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

/// Map f over [0, n). Slot-writing only; no reduction inside.
template <class F>
void for_each(std::size_t n, F&& f, Exec exec = Exec::openmp) {
    if (exec == Exec::openmp && n > 1 && max_threads() > 1) {
        const int nt = max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) f(i);
    }
}

}
