#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace kpar {

/// Runs body(begin, end, worker) over a block partition of [0, n).
/// Blocks are contiguous and merged in worker order by the caller, so
/// results are deterministic for any worker count.
template <class Body>
void parallel_blocks(std::int64_t n, int workers, Body body) {
    if (workers <= 1 || n < 2048) {
        body(std::int64_t(0), n, 0);
        return;
    }
    if (workers > static_cast<int>(std::thread::hardware_concurrency()) * 4)
        workers = static_cast<int>(std::thread::hardware_concurrency()) * 4;
    std::vector<std::thread> pool;
    std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t lo = w * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] { body(lo, hi, w); });
    }
    for (auto& t : pool) t.join();
}

} // namespace kpar
