#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cliquereg {

/// Runs fn(begin, end) over a fixed contiguous partition of [0, n).
/// The partition depends only on (n, threads), never on scheduling, and
/// callers write to disjoint output ranges, so results are identical for
/// any thread count.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        fn(0, n);
        return;
    }
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    const std::size_t chunk = (n + t - 1) / t;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t b = i * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& th : pool) th.join();
}

}  // namespace cliquereg
