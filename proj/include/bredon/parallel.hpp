#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bredon {

/// Worker count for a `--jobs` value; 0 means available parallelism.
inline unsigned resolve_jobs(unsigned jobs)
{
    if (jobs == 0)
        jobs = std::thread::hardware_concurrency();
    return jobs == 0 ? 1 : jobs;
}

/// Calls f(i) for i in [0, n) on at most `jobs` threads. Items are claimed
/// in index order; the first exception thrown by any call is rethrown
/// after all workers stop.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&] {
        while (!failed.load()) {
            const auto i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace bredon
