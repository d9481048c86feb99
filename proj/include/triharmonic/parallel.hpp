#ifndef TRIHARMONIC_PARALLEL_HPP
#define TRIHARMONIC_PARALLEL_HPP

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace triharmonic {

/// Worker cap: TRIHARMONIC_THREADS if set (clamped to [1, 64]), otherwise
/// hardware concurrency capped at 8.
inline int worker_count() {
    if (const char* env = std::getenv("TRIHARMONIC_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n < 1) return 1;
            return n > 64 ? 64 : n;
        } catch (...) {
            return 1;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned n = hw == 0 ? 1 : hw;
    return static_cast<int>(n > 8 ? 8 : n);
}

/// Run fn(i) for i in [0, n) on up to worker_count() threads, contiguous
/// chunks. Results must be written to disjoint, preallocated slots so the
/// output is identical for any worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace triharmonic

#endif // TRIHARMONIC_PARALLEL_HPP
