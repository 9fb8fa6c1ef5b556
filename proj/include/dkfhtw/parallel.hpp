#pragma once

#include <cstddef>
#include <functional>

namespace dkfhtw {

/// Worker count: min(hardware_concurrency, DKFHTW_THREADS if set). At least 1.
int thread_count();

/// Runs fn(i) for i in [0, n). Work is split into fixed-size blocks that do
/// not depend on the worker count, so any per-block output is identical no
/// matter how many threads execute. fn must only write to state owned by
/// index i (or a per-block slot).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Block variant: fn(begin, end) over disjoint ranges. Ranges are fixed by
/// `grain`, independent of thread count.
void parallel_for_blocks(std::size_t n, std::size_t grain,
                         const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace dkfhtw
