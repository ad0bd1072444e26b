#include "pqvrf/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pqvrf {

namespace {
std::atomic<ExecPolicy> g_policy{ExecPolicy::Parallel};
}

ExecPolicy default_exec_policy() {
    return g_policy.load();
}

void set_default_exec_policy(ExecPolicy p) {
    g_policy.store(p);
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void parallel_for_impl(size_t begin, size_t end, ExecPolicy policy,
                       void (*body)(size_t, void*), void* ctx) {
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel && end - begin > 1) {
        const long long b = static_cast<long long>(begin);
        const long long e = static_cast<long long>(end);
#pragma omp parallel for schedule(static)
        for (long long i = b; i < e; ++i) body(static_cast<size_t>(i), ctx);
        return;
    }
#else
    (void)policy;
#endif
    for (size_t i = begin; i < end; ++i) body(i, ctx);
}

}  // namespace detail
}  // namespace pqvrf
