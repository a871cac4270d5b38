#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rsc::detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Integer power; throws std::overflow_error once the result passes `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                                 std::uint64_t limit = UINT64_MAX) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) throw std::overflow_error("power exceeds limit");
        r *= base;
    }
    return r;
}

struct PrimePower {
    std::uint64_t p = 0;
    unsigned m = 0;
};

/// Decomposes q = p^m with p prime and m >= 1, if possible.
inline std::optional<PrimePower> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, m};
}

/// Largest r with p^r <= w (w >= 1).
inline unsigned floor_log(std::uint64_t w, std::uint64_t p) {
    if (w == 0 || p < 2) throw std::invalid_argument("floor_log needs w >= 1 and p >= 2");
    unsigned r = 0;
    std::uint64_t acc = 1;
    while (acc <= w / p) {
        acc *= p;
        ++r;
    }
    return r;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace rsc::detail
