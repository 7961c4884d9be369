#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace abcdepth::detail {

// Static row partition; each index is processed exactly once and results land
// in disjoint slots, so output is identical to the sequential order.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, int threads, Fn&& fn) {
    if (threads <= 1 || end - begin < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::size_t count = end - begin;
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = begin + t; i < end; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace abcdepth::detail
