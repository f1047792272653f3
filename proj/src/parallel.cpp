#include "flowforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace flowforge {

unsigned thread_count() {
    static const unsigned cached = [] {
        if (const char* env = std::getenv("FLOWFORGE_THREADS")) {
            try {
                long v = std::stol(env);
                if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
            } catch (const std::exception&) {
                // fall through to the hardware default
            }
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }();
    return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain) {
    if (n == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), (n + grain - 1) / grain));
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& t : threads) t.join();
}

}  // namespace flowforge
