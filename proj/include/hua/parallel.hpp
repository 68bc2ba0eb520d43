#pragma once

#include <functional>
#include <thread>

#include "hua/arith.hpp"

namespace hua {

// Static-partition parallel loop over [0, n); falls back to serial for
// small ranges or threads <= 1.
inline void parallel_for(i64 n, unsigned threads, const std::function<void(i64)>& body) {
    if (n <= 0) return;
    if (threads <= 1 || n < 64) {
        for (i64 i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned t = std::min<unsigned>(threads, std::thread::hardware_concurrency() > 0
                                                 ? std::thread::hardware_concurrency() * 2
                                                 : threads);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned k = 0; k < t; ++k) {
        pool.emplace_back([&, k] {
            for (i64 i = k; i < n; i += t) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace hua
