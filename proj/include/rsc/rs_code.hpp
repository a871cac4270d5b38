#pragma once

// Reed-Solomon codes RS_k(q): evaluations of polynomials of degree < k at
// alpha^0, ..., alpha^(q-2).  Codes are handled symbolically; only
// `materialize_code` lists codewords, behind a size guard.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsc/finite_field.hpp"

namespace rsc {

using Word = std::vector<Elem>;

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit Polynomial(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(Elem c) { return Polynomial({c}); }
    static Polynomial monomial(const Field& f, std::size_t degree, Elem c) {
        std::vector<Elem> v(degree + 1, f.zero());
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Elem eval(const Field& f, Elem x) const {
        Elem acc = f.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
        return acc;
    }

    Polynomial plus(const Field& f, const Polynomial& o) const {
        std::vector<Elem> r(std::max(coeffs_.size(), o.coeffs_.size()), f.zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = f.add(r[i], o.coeffs_[i]);
        return Polynomial(std::move(r));
    }

    Polynomial times(const Field& f, const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Elem> r(coeffs_.size() + o.coeffs_.size() - 1, f.zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] = f.add(r[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
    }

    std::vector<Elem> coeffs_;
};

class RsSpec {
public:
    RsSpec(FieldPtr field, std::uint32_t k) : field_(std::move(field)), k_(k) {
        if (k_ < 1 || k_ > field_->q() - 1)
            throw std::invalid_argument("RS dimension k=" + std::to_string(k) + " outside [1, q-1]");
    }
    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t n() const noexcept { return field_->q() - 1; }
    std::uint32_t d() const noexcept { return field_->q() - k_; }

private:
    FieldPtr field_;
    std::uint32_t k_;
};

inline std::vector<Elem> evaluation_points(const Field& f) {
    std::vector<Elem> pts(f.q() - 1);
    for (std::uint32_t i = 0; i + 1 < f.q(); ++i) pts[i] = f.exp(i);
    return pts;
}

/// ev(f) restricted to deg f < k.
inline Word encode(const RsSpec& spec, const Polynomial& poly) {
    if (poly.degree() >= static_cast<long>(spec.k()))
        throw std::invalid_argument("polynomial degree " + std::to_string(poly.degree()) + " >= k=" +
                                    std::to_string(spec.k()));
    const Field& f = *spec.field();
    Word c(spec.n());
    for (std::uint32_t i = 0; i < spec.n(); ++i) c[i] = poly.eval(f, f.exp(i));
    return c;
}

/// f(F_q), including f(0).
inline ElemSet image(const Polynomial& poly, const Field& f) {
    std::vector<Elem> out;
    out.reserve(f.q());
    for (std::uint32_t v = 0; v < f.q(); ++v) out.push_back(poly.eval(f, Elem{v}));
    return make_set(std::move(out));
}

/// Set of components of a word.
inline ElemSet word_image(const Word& c) { return make_set(std::vector<Elem>(c.begin(), c.end())); }

/// ceil((q-1)/(w1 w2)) + 1.
inline std::uint64_t threshold_k(std::uint64_t q, std::uint64_t w1, std::uint64_t w2) {
    if (w1 < 1 || w2 < 1) throw std::invalid_argument("coalition bounds must be >= 1");
    if (q < 4) throw std::invalid_argument("q must be >= 4");
    return detail::ceil_div(q - 1, w1 * w2) + 1;
}

/// k-1 < (q-1)/(w1 w2), in exact integer arithmetic.
inline bool distance_bound_equiv(std::uint64_t q, std::uint64_t k, std::uint64_t w1, std::uint64_t w2) {
    if (k < 1 || k > q - 1) throw std::invalid_argument("k outside [1, q-1]");
    return (k - 1) * w1 * w2 < q - 1;
}

/// d > n - n/(w1 w2) with d = q-k, n = q-1, multiplied through by w1 w2.
inline bool distance_bound_direct(std::uint64_t q, std::uint64_t k, std::uint64_t w1, std::uint64_t w2) {
    const std::uint64_t n = q - 1, d = q - k, w = w1 * w2;
    return d * w > n * w - n;
}

/// prod_{v in span(basis)} (x - v): an additive polynomial with kernel span(basis).
inline Polynomial subspace_polynomial(const Field& f, const std::vector<Elem>& basis) {
    Polynomial acc = Polynomial::constant(f.one());
    for (Elem v : span(f, basis)) acc = acc.times(f, Polynomial({f.neg(v), f.one()}));
    return acc;
}

/// Calls fn on every polynomial of degree < k (q^k of them), lexicographic by coefficient.
inline void for_each_polynomial(const Field& f, std::uint32_t k, const std::function<void(const Polynomial&)>& fn) {
    std::vector<Elem> c(k, f.zero());
    while (true) {
        fn(Polynomial(c));
        std::size_t i = 0;
        while (i < k && c[i].value + 1 == f.q()) c[i++] = f.zero();
        if (i == k) return;
        c[i].value += 1;
    }
}

/// Lists all codewords of RS_k(q); throws if q^k exceeds `max_words`.
inline std::vector<Word> materialize_code(const RsSpec& spec, std::uint64_t max_words = 1'000'000) {
    std::uint64_t count = 0;
    try {
        count = detail::checked_pow(spec.field()->q(), spec.k(), max_words);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("code size q^k exceeds guard " + std::to_string(max_words));
    }
    std::vector<Word> words;
    words.reserve(count);
    for_each_polynomial(*spec.field(), spec.k(), [&](const Polynomial& p) { words.push_back(encode(spec, p)); });
    return words;
}

}  // namespace rsc
