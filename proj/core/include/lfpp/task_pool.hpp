#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lfpp {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Callers write
/// results into index-addressed slots so output never depends on scheduling.
/// The first exception thrown by a task is rethrown after all threads join.
inline void parallel_for_indexed(int count, int workers, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    if (workers <= 1 || count == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min(workers, count);
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lfpp
