#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fewnomial {

/// Worker count: FEWNOMIAL_THREADS when set and positive, otherwise the
/// hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("FEWNOMIAL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(i) for i in [0, count). Each index is processed exactly once;
/// fn must only write to per-index state.
inline void parallel_for(long long count, const std::function<void(long long)>& fn) {
    int workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    if (workers > count) workers = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long long i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fewnomial
