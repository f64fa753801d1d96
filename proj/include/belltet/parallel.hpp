// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstddef>
#include <functional>

namespace belltet::par {

// BELLTET_THREADS caps the pool (default: hardware concurrency, min 1).
unsigned worker_count();

// Splits [0, n) into one contiguous chunk per worker and runs fn(begin, end) on
// each. Chunk boundaries depend only on n and the worker count, and workers
// write disjoint ranges, so results are deterministic for fixed settings.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace belltet::par
