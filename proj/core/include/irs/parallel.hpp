// SPDX-License-Identifier: Apache-2.0
//
// Static-partition parallel loop used by the sweeps and the exhaustive search.

#ifndef IRS_PARALLEL_HPP
#define IRS_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

namespace irs {

inline constexpr const char* kThreadsEnvVar = "IRS_SIM_THREADS";

/// Parses a positive integer thread count; nullopt for anything else.
std::optional<std::size_t> parse_thread_count(std::string_view text);

/// Worker count: IRS_SIM_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t default_worker_count();

/// Calls body(begin, end) on contiguous chunks covering [0, n). Chunk boundaries depend only on
/// n and the worker count. The first exception thrown by any chunk is rethrown.
template <typename Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body)
{
    if (n == 0)
        return;
    workers = std::clamp<std::size_t>(workers, 1, n);
    if (workers == 1) {
        body(std::size_t{0}, n);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = n / workers;
        const std::size_t extra = n % workers;
        std::size_t begin = 0;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t end = begin + chunk + (w < extra ? 1 : 0);
            pool.emplace_back([&, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
            begin = end;
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace irs

#endif // IRS_PARALLEL_HPP
