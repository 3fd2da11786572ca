#ifndef LEGPROJ_PARALLEL_HPP
#define LEGPROJ_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace legproj {

/// Worker count: hardware concurrency, capped by LEGPROJ_THREADS when set.
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LEGPROJ_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1)
                n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
        }
    }
    return n;
}

/// Evaluates fn(0..count-1), results in index order regardless of scheduling.
/// The first exception thrown by any task is rethrown on the calling thread.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        slots[i].emplace(fn(i));
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                }
            });
        }
        pool.clear();
        if (error)
            std::rethrow_exception(error);
    }
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace legproj

#endif // LEGPROJ_PARALLEL_HPP
