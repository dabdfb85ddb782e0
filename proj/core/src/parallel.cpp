// SPDX-License-Identifier: Apache-2.0

#include "irs/parallel.hpp"

#include <charconv>
#include <cstdlib>

namespace irs {

std::optional<std::size_t> parse_thread_count(std::string_view text)
{
    std::size_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
        return std::nullopt;
    return value;
}

std::size_t default_worker_count()
{
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        if (auto n = parse_thread_count(env))
            return *n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace irs
