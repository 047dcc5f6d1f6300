#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace votelace {

/// Evaluates `part_count(i)` for every i in [0, parts) on up to `jobs`
/// threads and returns the sum. Partial results are stored per part and
/// added in index order, so the result does not depend on `jobs`.
template <typename PartFn>
std::uint64_t parallel_sum(std::size_t parts, unsigned jobs, PartFn part_count) {
    std::vector<std::uint64_t> partial(parts, 0);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(parts, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < parts; ++i) partial[i] = part_count(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < parts; i = next++) {
                try {
                    partial[i] = part_count(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }
    std::uint64_t total = 0;
    for (auto value : partial) total += value;
    return total;
}

}  // namespace votelace
