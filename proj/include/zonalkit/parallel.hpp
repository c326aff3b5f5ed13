#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace zonalkit {

// Library-wide worker count for the map-reduce sums; 1 means serial.
inline int& global_thread_count() {
    static int count = 1;
    return count;
}

// Deterministic parallel sum of fn(0) + fn(1) + ... + fn(n-1): the index
// space is split into contiguous chunks, each chunk is folded left to right,
// and the partials are combined in chunk order. With exact (associative)
// addition the result is identical for every thread count.
template <class T, class Map>
T parallel_map_reduce_sum(std::uint64_t n, T zero, Map&& fn, int threads = 0) {
    if (threads <= 0) threads = global_thread_count();
    if (threads > 1 && static_cast<std::uint64_t>(threads) > n)
        threads = static_cast<int>(n > 0 ? n : 1);

    if (threads <= 1) {
        T acc = zero;
        for (std::uint64_t i = 0; i < n; ++i) acc += fn(i);
        return acc;
    }

    std::vector<T> partials(threads, zero);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = n * t / threads;
        std::uint64_t hi = n * (t + 1) / threads;
        workers.emplace_back([&partials, &fn, t, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) partials[t] += fn(i);
        });
    }
    for (auto& w : workers) w.join();
    T acc = zero;
    for (auto& part : partials) acc += part;
    return acc;
}

} // namespace zonalkit
