#pragma once

// Ordered parallel map over an index range. Workers pull indices from a
// shared counter; results land in their slot, so output order is independent
// of scheduling.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace eslab {

template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Result> results(n);
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                results[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace eslab
