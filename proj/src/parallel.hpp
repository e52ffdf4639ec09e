#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace srg::detail {

// SRG_THREADS caps worker count; 0 or unset means hardware concurrency.
inline int thread_cap() {
    if (const char* env = std::getenv("SRG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-partitioned parallel loop; results must be written by index so the
// outcome is independent of the schedule.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace srg::detail
