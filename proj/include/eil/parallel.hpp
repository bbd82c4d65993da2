#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace eil {

/// Calls fn(i) for i in [0, count) on up to `workers` threads. Each index
/// must write only to its own slot, so results do not depend on scheduling.
/// If any call throws, the exception of the lowest failing index is rethrown.
template <class Fn>
void for_each_index(std::size_t count, unsigned workers, Fn&& fn) {
    const std::size_t pool_size = std::min<std::size_t>(std::max(workers, 1u), count);
    if (pool_size <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    {
        std::vector<std::jthread> pool;
        pool.reserve(pool_size);
        for (std::size_t w = 0; w < pool_size; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        fn(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace eil
