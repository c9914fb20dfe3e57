#pragma once

#include <thread>
#include <vector>

namespace dynbv {

/// Run fn(begin, end, worker) over [0, total) split into static contiguous
/// chunks, one per worker. Each worker sees a fixed range, so per-index
/// derived rng streams make results independent of the thread count.
template <class Fn>
void parallel_chunks(long total, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || total < 2) {
        fn(0L, total, 0);
        return;
    }
    const long chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        const long b = w * chunk;
        const long e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dynbv
