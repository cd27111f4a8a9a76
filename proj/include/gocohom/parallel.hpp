#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace gocohom {

// Applies fn(i) for i in [0, count) across up to `jobs` threads and collects
// the results in index order. Results stay deterministic because each index
// writes its own slot.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn fn) {
    std::vector<T> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) out[i] = fn(i);
        });
    }
    for (auto& th : threads) th.join();
    return out;
}

}  // namespace gocohom
