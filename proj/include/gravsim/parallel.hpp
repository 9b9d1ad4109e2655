#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gravsim {

// Thread budget for sweep-type work: hardware concurrency, optionally capped
// by the GRAVSIM_THREADS environment variable.
inline unsigned sweep_thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GRAVSIM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Evaluate fn(i) for i in [0, n) on up to sweep_thread_budget() threads.
// Results are written by index, so output order is the input order. The
// first exception raised by any worker is rethrown on the caller.
inline void parallel_for_ordered(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned budget =
        static_cast<unsigned>(std::min<std::size_t>(sweep_thread_budget(), n));
    if (budget <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::atomic_flag error_claimed = ATOMIC_FLAG_INIT;
    std::vector<std::thread> workers;
    workers.reserve(budget);
    for (unsigned w = 0; w < budget; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += budget) fn(i);
            } catch (...) {
                if (!error_claimed.test_and_set()) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gravsim
