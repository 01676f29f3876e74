#include "stircalc/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stircalc::parallel {

namespace {

// 0 = not set yet, use the runtime default.
std::atomic<int> g_max_threads{0};

int runtime_default() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Below this many work items the fork/join overhead outweighs the big-number
// arithmetic; tuned coarsely, exactness does not depend on it.
constexpr std::size_t kMinParallelItems = 32;

} // namespace

int max_threads() {
    const int v = g_max_threads.load(std::memory_order_relaxed);
    return v > 0 ? v : runtime_default();
}

void set_max_threads(int n) {
    g_max_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

bool use_parallel(std::size_t work_items) {
#ifdef _OPENMP
    return max_threads() > 1 && work_items >= kMinParallelItems;
#else
    (void)work_items;
    return false;
#endif
}

} // namespace stircalc::parallel
