#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace btbm {

// Worker count: BTBM_WORKERS env var, else hardware concurrency.  Workers
// only partition index ranges; every result is stored by replicate index, so
// output never depends on the worker count.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BTBM_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <class Fn>
void parallel_for(std::size_t n, const Fn& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace btbm
