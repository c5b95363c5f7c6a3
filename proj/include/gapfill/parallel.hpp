#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace gapfill {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(row_begin, row_end) over contiguous bands of [0, height).  Each
// band writes disjoint output rows, so results never depend on the thread
// count or interleaving.
template <typename Fn>
void parallel_for_rows(int height, int threads, Fn&& fn) {
    const int n = std::min(resolve_threads(threads), std::max(height, 1));
    if (n <= 1 || height <= 1) {
        fn(0, height);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    const int base = height / n, extra = height % n;
    int row = 0;
    for (int t = 0; t < n; ++t) {
        const int count = base + (t < extra ? 1 : 0);
        const int begin = row, end = row + count;
        row = end;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace gapfill
