#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace weitz::detail {

/// Evaluates f(0), ..., f(count - 1) on a pool of threads. Results are stored
/// by index, so the output does not depend on scheduling. `threads` = 0 uses
/// the hardware concurrency.
template <class F>
auto parallel_map(std::size_t count, F f, std::size_t threads = 0)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> results(count);
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    const std::size_t workers = std::min(count, threads);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = f(i);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        results[i] = f(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

} // namespace weitz::detail
