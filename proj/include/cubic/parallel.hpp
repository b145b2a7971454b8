#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cubic::detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items are
/// claimed from a shared counter; callers keep per-index result slots so the
/// combined outcome does not depend on scheduling.
template <typename Fn>
void run_indexed(int jobs, std::size_t count, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::size_t num_threads = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> threads;
    threads.reserve(num_threads);
    for (std::size_t t = 0; t < num_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace cubic::detail
