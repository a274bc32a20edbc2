#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace homstab {

/// Runs fn(0), ..., fn(count-1) on up to `jobs` worker threads.  Callers
/// write results into per-index slots, so the schedule never affects the
/// output.  The first exception, if any, is rethrown after all workers join.
inline void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_guard;
    const std::size_t workers = std::min(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (!failed.load()) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_guard);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace homstab
