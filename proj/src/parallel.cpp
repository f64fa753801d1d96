// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace belltet::par {

unsigned worker_count() {
    static const unsigned count = [] {
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        if (const char* env = std::getenv("BELLTET_THREADS")) {
            try {
                const long requested = std::stol(env);
                if (requested >= 1) return static_cast<unsigned>(std::min<long>(requested, 256));
            } catch (...) {
                // Unparseable override falls back to hardware concurrency.
            }
        }
        return hw;
    }();
    return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (n == 0) return;
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::size_t chunk = (n + workers - 1) / workers;

    // First exception wins; every thread joins before the rethrow so no
    // joinable thread is ever destroyed.
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto guarded = [&](std::size_t begin, std::size_t end) {
        try {
            fn(begin, end);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        if (begin >= n) break;
        pool.emplace_back(guarded, begin, std::min(n, begin + chunk));
    }
    guarded(0, std::min(n, chunk));
    for (std::thread& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace belltet::par
