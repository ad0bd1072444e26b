#pragma once

#include <cstddef>

namespace pqvrf {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path kept for testing; Parallel uses OpenMP when compiled in. Both paths
/// perform identical arithmetic in identical per-element order, so results
/// are bit-identical regardless of thread count.
enum class ExecPolicy { Serial, Parallel };

/// Process-wide default used when a kernel is called without a policy.
ExecPolicy default_exec_policy();
void set_default_exec_policy(ExecPolicy p);

bool openmp_enabled();
int max_threads();

namespace detail {
void parallel_for_impl(size_t begin, size_t end, ExecPolicy policy,
                       void (*body)(size_t, void*), void* ctx);
}

/// Runs body(i) for i in [begin, end). Iterations must be independent.
template <typename F>
void parallel_for(size_t begin, size_t end, ExecPolicy policy, F&& body) {
    auto thunk = [](size_t i, void* ctx) { (*static_cast<F*>(ctx))(i); };
    detail::parallel_for_impl(begin, end, policy, thunk, &body);
}

}  // namespace pqvrf
