#ifndef SLNFIT_SRC_PARALLEL_HPP
#define SLNFIT_SRC_PARALLEL_HPP

// Internal: splits an index range across worker threads. Bodies must write
// disjoint state so results are identical for every worker count.

#include <cstddef>
#include <thread>
#include <vector>

namespace slnfit::detail {

inline int resolve_threads(int requested, std::size_t n) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<std::size_t>(t) > n) t = static_cast<int>(n == 0 ? 1 : n);
    return t;
}

template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
    const int t = resolve_threads(threads, n);
    if (t == 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::size_t chunk = n / t, extra = n % t;
    std::size_t lo = 0;
    for (int k = 0; k < t; ++k) {
        const std::size_t hi = lo + chunk + (static_cast<std::size_t>(k) < extra ? 1 : 0);
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

}  // namespace slnfit::detail

#endif
