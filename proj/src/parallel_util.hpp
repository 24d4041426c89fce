#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dcos::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, n) on a small worker pool. The first exception
// wins; remaining work is abandoned and the exception rethrown on the caller.
inline void parallel_for_index(std::size_t n, int jobs,
                               const std::function<void(std::size_t)>& body) {
    const int n_workers = std::min<int>(resolve_jobs(jobs), static_cast<int>(n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };

    if (n_workers <= 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) workers.emplace_back(work);
        for (auto& t : workers) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dcos::detail
