#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rsc::detail {

/// Smallest i in [0, n) with pred(i), or n.  Indices are striped across
/// `workers` threads; the answer does not depend on scheduling.
inline std::size_t parallel_first(std::size_t n, unsigned workers, const std::function<bool(std::size_t)>& pred) {
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::atomic<std::size_t> best{n};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += workers) {
                if (i >= best.load(std::memory_order_relaxed)) return;
                if (pred(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return best.load();
}

/// Runs fn(i) for every i in [0, n) across `workers` threads.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

/// All k-subsets of {0..n-1} for k = 1..max_size, size-major then lexicographic.
inline std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n, std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            out.push_back(c);
            std::size_t i = k;
            while (i > 0 && c[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

/// sum_{k=1..max_size} C(n, k), saturating.
inline std::uint64_t count_subsets_up_to(std::uint64_t n, std::uint64_t max_size) {
    std::uint64_t total = 0, binom = 1;
    for (std::uint64_t k = 1; k <= std::min(n, max_size); ++k) {
        // binom = C(n, k)
        const std::uint64_t num = n - k + 1;
        if (binom > UINT64_MAX / num) return UINT64_MAX;
        binom = binom * num / k;
        if (total > UINT64_MAX - binom) return UINT64_MAX;
        total += binom;
    }
    return total;
}

}  // namespace rsc::detail
