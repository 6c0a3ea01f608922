#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hypuni {

// Worker count: HYPUNI_THREADS if set and positive, else hardware threads.
inline int worker_count() {
    if (const char* env = std::getenv("HYPUNI_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks,
// one per worker, so each index is processed exactly once and results
// written to disjoint slots land identically for any worker count.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = worker_count();
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hypuni
