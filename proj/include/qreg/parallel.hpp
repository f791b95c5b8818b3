#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "qreg/bigint.hpp"

namespace qreg {

// Worker count for sweeps: hardware concurrency capped by QREG_THREADS.
inline unsigned sweep_workers() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QREG_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<long>(n, cap);
    }
    return n;
}

/**
 * Smallest index in [lo, hi) where `violates` returns true, scanning chunks
 * in parallel. The reduction is a minimum, so the result is deterministic
 * regardless of worker count.
 */
template <class Fn>
std::optional<Index> find_first_violation(Index lo, Index hi, Fn&& violates,
                                          unsigned workers = sweep_workers()) {
    if (lo >= hi) return std::nullopt;
    const Index span = hi - lo;
    workers = static_cast<unsigned>(std::min<Index>(workers, span));
    if (workers <= 1) {
        for (Index n = lo; n < hi; ++n)
            if (violates(n)) return n;
        return std::nullopt;
    }
    std::atomic<Index> best{hi};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const Index chunk = (span + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const Index a = lo + chunk * w;
        const Index b = std::min(hi, a + chunk);
        if (a >= b) break;
        pool.emplace_back([&, a, b] {
            if (a >= best.load(std::memory_order_relaxed)) return;
            for (Index n = a; n < b; ++n) {
                if (violates(n)) {
                    Index cur = best.load(std::memory_order_relaxed);
                    while (n < cur &&
                           !best.compare_exchange_weak(cur, n, std::memory_order_relaxed)) {
                    }
                    return;  // ascending scan: n is this chunk's minimum
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    Index found = best.load();
    if (found == hi) return std::nullopt;
    return found;
}

} // namespace qreg
