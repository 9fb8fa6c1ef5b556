#include "dkfhtw/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dkfhtw {

int thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("DKFHTW_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void parallel_for_blocks(std::size_t n, std::size_t grain,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (grain == 0) grain = 1;
    const std::size_t nblocks = (n + grain - 1) / grain;
    const int nthreads = std::min<std::size_t>(thread_count(), nblocks);
    if (nthreads <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            fn(b * grain, std::min(n, (b + 1) * grain));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            try {
                fn(b * grain, std::min(n, (b + 1) * grain));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads) - 1);
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    // Grain keeps scheduling overhead low while block boundaries stay fixed.
    std::size_t grain = std::max<std::size_t>(1, n / 256);
    parallel_for_blocks(n, grain, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

} // namespace dkfhtw
