#include "uec/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uec {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int threads) { g_max_threads.store(threads < 0 ? 0 : threads); }

int max_threads() {
    const int cap = g_max_threads.load();
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
    return cap == 0 ? hw : (cap < hw ? cap : hw);
#else
    return 1;
#endif
}

namespace detail {

void run_indexed(std::int64_t count, Exec exec, void* ctx, void (*body)(void*, std::int64_t)) {
    if (count <= 0) return;
#ifdef _OPENMP
    if (exec == Exec::parallel && count > 1) {
        const int threads = max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) body(ctx, i);
        return;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < count; ++i) body(ctx, i);
}

}  // namespace detail

}  // namespace uec
