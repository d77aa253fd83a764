#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace evchar {

/// Runs f(i) for i in [0, count) across `workers` threads and collects the
/// results indexed by i. The caller reduces the vector sequentially, so the
/// outcome is identical for any worker count.
template <class T, class F>
std::vector<T> parallel_map(int workers, size_t count, F f) {
    std::vector<T> results(count);
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) results[i] = f(i);
        return results;
    }
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            results[i] = f(i);
        }
    };
    std::vector<std::thread> threads;
    int spawn = workers;
    if (static_cast<size_t>(spawn) > count) spawn = static_cast<int>(count);
    threads.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) threads.emplace_back(run);
    for (auto& th : threads) th.join();
    return results;
}

}  // namespace evchar
