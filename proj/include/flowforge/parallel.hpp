#pragma once

#include <cstddef>
#include <functional>

namespace flowforge {

// Worker cap: FLOWFORGE_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned thread_count();

// Runs fn(begin, end) over contiguous chunks of [0, n). Chunk
// boundaries depend only on n and the worker count, and callers write
// results by index, so output never depends on scheduling. Small n runs
// inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain = 1024);

}  // namespace flowforge
