#pragma once

// Subspace subcodes of RS_k(2^m): cyclotomic cosets mod 2^m - 1, the lower
// bound L(k,v) on the binary dimension, and the exact dimension K computed as
// m*k minus the GF(2)-rank of the "every component lies in S" constraints.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsc/finite_field.hpp"
#include "rsc/separability.hpp"

namespace rsc {

struct CyclotomicCoset {
    std::uint32_t leader = 0;
    std::vector<std::uint32_t> elements;  // sorted
    std::size_t size() const noexcept { return elements.size(); }
};

inline constexpr unsigned kMaxCosetDegree = 24;

/// Doubling orbits mod 2^m - 1, ordered by leader (the smallest member).
inline std::shared_ptr<const std::vector<CyclotomicCoset>> cyclotomic_cosets(unsigned m) {
    if (m < 2 || m > kMaxCosetDegree) throw std::invalid_argument("cyclotomic_cosets needs 2 <= m <= 24");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const std::vector<CyclotomicCoset>>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    const std::uint32_t n = (std::uint32_t{1} << m) - 1;
    std::vector<bool> seen(n, false);
    auto out = std::make_shared<std::vector<CyclotomicCoset>>();
    for (std::uint32_t j = 0; j < n; ++j) {
        if (seen[j]) continue;
        CyclotomicCoset c{j, {}};
        std::uint32_t x = j;
        do {
            seen[x] = true;
            c.elements.push_back(x);
            x = static_cast<std::uint32_t>((std::uint64_t{x} * 2) % n);
        } while (x != j);
        std::sort(c.elements.begin(), c.elements.end());
        out->push_back(std::move(c));
    }
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(out)).first->second;
}

struct CosetRow {
    std::uint32_t j = 0;  // coset leader
    unsigned d = 0;       // coset size
    unsigned e = 0;       // members in {1..k}
    unsigned a = 0;       // m*e/d
    long term = 0;        // max(d*(a-(m-v)), 0)
};

struct SsrsDims {
    unsigned m = 0;
    std::uint64_t k = 0;
    unsigned v = 0;
    long L = 0;
    std::optional<long> K;
    std::vector<CosetRow> rows;
};

/// L(k,v) = sum over cosets of max(d_j (a_j - (m - v)), 0) with e_j = |coset cap {1..k}|.
inline SsrsDims lower_bound_L(unsigned m, std::uint64_t k, unsigned v) {
    const auto cosets = cyclotomic_cosets(m);
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (k < 1 || k > n) throw std::invalid_argument("k outside [1, 2^m - 1]");
    if (v > m) throw std::invalid_argument("v outside [0, m]");
    SsrsDims out{m, k, v, 0, std::nullopt, {}};
    out.rows.reserve(cosets->size());
    for (const auto& c : *cosets) {
        CosetRow row;
        row.j = c.leader;
        row.d = static_cast<unsigned>(c.size());
        row.e = static_cast<unsigned>(std::count_if(c.elements.begin(), c.elements.end(),
                                                    [&](std::uint32_t x) { return (x == 0 ? n : x) <= k; }));
        if ((m * row.e) % row.d != 0) throw std::logic_error("a_j is not integral");
        row.a = m * row.e / row.d;
        row.term = std::max(static_cast<long>(row.d) * (static_cast<long>(row.a) - static_cast<long>(m - v)), 0L);
        out.L += row.term;
        out.rows.push_back(row);
    }
    return out;
}

namespace detail {

/// Incremental GF(2) row reduction over bit-packed rows.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(std::size_t cols) : cols_(cols), words_((cols + 63) / 64), pivots_(cols) {}

    std::size_t rank() const noexcept { return rank_; }
    bool full() const noexcept { return rank_ == cols_; }

    /// Returns true if the row was independent of those already added.
    bool add(std::vector<std::uint64_t> row) {
        for (std::size_t w = 0; w < words_; ++w) {
            while (row[w]) {
                const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
                auto& piv = pivots_[col];
                if (piv.empty()) {
                    piv = std::move(row);
                    ++rank_;
                    return true;
                }
                for (std::size_t k = w; k < words_; ++k) row[k] ^= piv[k];
            }
        }
        return false;
    }

private:
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> pivots_;
    std::size_t rank_ = 0;
};

/// Bit masks lambda_1..lambda_(m-v) whose common kernel is S (p = 2).
inline std::vector<std::uint32_t> annihilator(unsigned m, const std::vector<Elem>& basis) {
    // Row-reduce the basis, then read off the null space of the v x m system.
    std::vector<std::uint32_t> rows;
    for (Elem e : basis) rows.push_back(e.value);
    std::vector<int> pivot_of_col(m, -1);
    std::size_t r = 0;
    for (unsigned col = 0; col < m && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !(rows[piv] >> col & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] >> col & 1)) rows[i] ^= rows[r];
        pivot_of_col[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::uint32_t> out;
    for (unsigned free = 0; free < m; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::uint32_t lambda = std::uint32_t{1} << free;
        for (unsigned col = 0; col < m; ++col) {
            const int pr = pivot_of_col[col];
            if (pr >= 0 && (rows[static_cast<std::size_t>(pr)] >> free & 1)) lambda |= std::uint32_t{1} << col;
        }
        out.push_back(lambda);
    }
    return out;
}

}  // namespace detail

struct ExactLimits {
    unsigned max_m = 12;
    std::uint64_t max_k = 4095;
};

/// Binary dimension of {c : every c_i in S} for the code c_i = sum_{t=1..k} f_t alpha^(i t),
/// i.e. RS_k(2^m) with column multipliers alpha^i, the exponent set J = {1..k} of the L bound.
inline long exact_K(const FieldPtr& field, std::uint64_t k, const SubspaceSpec& S, ExactLimits limits = {}) {
    const Field& f = *field;
    if (f.p() != 2) throw std::invalid_argument("exact_K needs characteristic 2");
    if (S.field() != field) throw std::invalid_argument("subspace belongs to a different field");
    if (f.m() > limits.max_m) throw std::invalid_argument("exact_K: m exceeds cap");
    const std::uint64_t n = f.q() - 1;
    if (k < 1 || k > n) throw std::invalid_argument("k outside [1, q-1]");
    if (k > limits.max_k) throw std::invalid_argument("exact_K: k exceeds cap");
    const unsigned m = f.m();
    const std::size_t cols = static_cast<std::size_t>(m) * k;

    const auto lambdas = detail::annihilator(m, S.basis());
    detail::Gf2Eliminator elim(cols);
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint32_t> images(cols);
    for (std::uint64_t i = 0; i < n && !elim.full(); ++i) {
        // images[t*m + b] = x^b * alpha^(i (t+1))
        for (std::uint64_t t = 0; t < k; ++t) {
            const Elem base = f.exp(i * (t + 1));
            for (unsigned b = 0; b < m; ++b) images[t * m + b] = f.mul(Elem{std::uint32_t{1} << b}, base).value;
        }
        for (std::uint32_t lambda : lambdas) {
            std::vector<std::uint64_t> row(words, 0);
            for (std::size_t col = 0; col < cols; ++col)
                if (std::popcount(images[col] & lambda) & 1) row[col / 64] |= std::uint64_t{1} << (col % 64);
            elim.add(std::move(row));
            if (elim.full()) break;
        }
    }
    return static_cast<long>(cols - elim.rank());
}

/// Non-trivial subcode (K > v) certified via L, optionally refined with exact_K on the canonical S.
inline bool is_nontrivial(unsigned m, std::uint64_t k, unsigned v, bool exact = false) {
    if (lower_bound_L(m, k, v).L > static_cast<long>(v)) return true;
    if (!exact) return false;
    const FieldPtr field = make_field(2, m);
    return exact_K(field, k, SubspaceSpec::canonical(field, v)) > static_cast<long>(v);
}

/// Largest v with 2^v <= w1*w2 such that GF(2^v) is (w1,w2)-separable by one of
/// the three field cases.
inline std::optional<unsigned> best_v(unsigned w1, unsigned w2, BracketReading reading = BracketReading::Floor) {
    if (w1 < 1 || w2 < 1) return std::nullopt;
    const unsigned top = detail::floor_log(std::uint64_t{w1} * w2, 2);
    for (unsigned v = top + 1; v-- > 0;) {
        if (lemma31_case(2, v, w1, w2, reading)) return v;
    }
    return std::nullopt;
}

}  // namespace rsc
