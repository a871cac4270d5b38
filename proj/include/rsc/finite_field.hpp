#pragma once

// Arithmetic in GF(p^m).
//
// Elements are stored as the radix-p integer of their coefficient vector in
// the polynomial basis 1, x, ..., x^(m-1): c_0 + c_1 p + ... + c_(m-1) p^(m-1).
// That integer is also the wire format used by every CLI/JSON/CSV output.
//
// Each (p, m) has one registry polynomial: the smallest (by the same radix-p
// encoding of its lower coefficients) monic primitive polynomial of degree m,
// so the designated generator alpha is the class of x (encoded as p) for
// m >= 2, and the smallest primitive root for m = 1.  The registry can be
// overridden with RSC_FIELD_REGISTRY, see docs/fields.md.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rsc/detail/number_theory.hpp"

namespace rsc {

struct Elem {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// Sorted, duplicate-free list of elements.
using ElemSet = std::vector<Elem>;

inline ElemSet make_set(std::vector<Elem> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline bool set_contains(const ElemSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

inline bool is_subset(const ElemSet& small, const ElemSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::vector<std::uint32_t> to_ints(const ElemSet& s) {
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (Elem e : s) out.push_back(e.value);
    return out;
}

struct FieldLimits {
    std::uint64_t size_cap = 1u << 20;
    /// Fields with q at or below this use log/antilog tables.
    std::uint64_t table_threshold = 1u << 16;
};

namespace detail {

/// Dense polynomial over GF(p), lowest degree first, no trailing zeros.
using PrimePoly = std::vector<unsigned>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod_prime(unsigned a, unsigned p) {
    // Fermat; p is prime and a != 0.
    std::uint64_t r = 1, b = a % p;
    unsigned e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, unsigned p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const unsigned lead_inv = inv_mod_prime(f.back(), p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const unsigned factor = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
        for (std::size_t i = 0; i <= df; ++i) {
            const std::uint64_t sub = std::uint64_t{factor} * f[i] % p;
            a[i + shift] = static_cast<unsigned>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<unsigned>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), f, p);
}

inline PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& f, unsigned p) {
    PrimePoly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: f of degree m is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= m/2.
inline bool is_irreducible(const PrimePoly& f, unsigned p) {
    if (f.size() < 2) return false;
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    PrimePoly h{0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        PrimePoly t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (t.empty()) return false;
        if (poly_gcd(f, t, p).size() > 1) return false;
    }
    return true;
}

inline bool x_is_primitive(const PrimePoly& f, unsigned p, std::uint64_t q) {
    const PrimePoly x{0, 1};
    if (poly_powmod(x, q - 1, f, p) != PrimePoly{1}) return false;
    for (std::uint64_t l : prime_factors(q - 1)) {
        if (poly_powmod(x, (q - 1) / l, f, p) == PrimePoly{1}) return false;
    }
    return true;
}

inline unsigned smallest_primitive_root(unsigned p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (unsigned g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t l : factors) {
            std::uint64_t r = 1, b = g, e = (p - 1) / l;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

/// Built-in registry rule; deterministic in (p, m).
inline PrimePoly builtin_registry_polynomial(unsigned p, unsigned m) {
    if (m == 1) {
        const unsigned g = smallest_primitive_root(p);
        return PrimePoly{(p - g) % p, 1};
    }
    const std::uint64_t q = checked_pow(p, m);
    const std::uint64_t lower = q;  // p^m choices for c_0..c_(m-1)
    for (std::uint64_t code = 1; code < lower; ++code) {
        PrimePoly f(m + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue;
        if (!x_is_primitive(f, p, q)) continue;
        if (!is_irreducible(f, p)) continue;
        return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

struct RegistryOverride {
    std::map<std::pair<unsigned, unsigned>, PrimePoly> entries;
};

/// Parses lines "p m c0 c1 ... cm" ('#' starts a comment).
inline RegistryOverride parse_registry(std::istream& in) {
    RegistryOverride reg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        unsigned p = 0, m = 0;
        if (!(ls >> p)) continue;
        if (!(ls >> m)) throw std::invalid_argument("registry line " + std::to_string(lineno) + ": missing m");
        PrimePoly f;
        unsigned c;
        while (ls >> c) f.push_back(c);
        if (f.size() != m + 1)
            throw std::invalid_argument("registry line " + std::to_string(lineno) + ": expected m+1 coefficients");
        reg.entries[{p, m}] = std::move(f);
    }
    return reg;
}

inline const RegistryOverride& registry_override() {
    static const RegistryOverride reg = [] {
        const char* path = std::getenv("RSC_FIELD_REGISTRY");
        if (path == nullptr || *path == '\0') return RegistryOverride{};
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open RSC_FIELD_REGISTRY file ") + path);
        return parse_registry(in);
    }();
    return reg;
}

}  // namespace detail

inline detail::PrimePoly registry_polynomial(unsigned p, unsigned m) {
    const auto& over = detail::registry_override().entries;
    if (auto it = over.find({p, m}); it != over.end()) return it->second;
    return detail::builtin_registry_polynomial(p, m);
}

class Field {
public:
    Field(unsigned p, unsigned m, detail::PrimePoly modulus, FieldLimits limits = {})
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
        try {
            q_ = static_cast<std::uint32_t>(detail::checked_pow(p, m, limits.size_cap));
        } catch (const std::overflow_error&) {
            throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds cap " + std::to_string(limits.size_cap));
        }
        if (modulus_.size() != m + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        for (unsigned c : modulus_) {
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (m >= 2 && modulus_[0] == 0) throw std::invalid_argument("modulus has root 0");
        if (!detail::is_irreducible(modulus_, p)) throw std::invalid_argument("modulus is reducible");

        radix_.resize(m_ + 1);
        radix_[0] = 1;
        for (unsigned i = 1; i <= m_; ++i) radix_[i] = radix_[i - 1] * p_;
        order_factors_ = detail::prime_factors(q_ - 1);

        alpha_ = find_generator();
        if (q_ <= limits.table_threshold) build_tables();
    }

    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    Elem alpha() const noexcept { return alpha_; }
    const detail::PrimePoly& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    bool contains(Elem a) const noexcept { return a.value < q_; }

    /// Embeds an integer of GF(p) as a constant.
    Elem constant(std::uint64_t c) const noexcept { return Elem{static_cast<std::uint32_t>(c % p_)}; }

    std::vector<unsigned> coeffs(Elem a) const {
        std::vector<unsigned> out(m_);
        std::uint32_t v = a.value;
        for (unsigned i = 0; i < m_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }

    Elem from_coeffs(const std::vector<unsigned>& c) const {
        if (c.size() > m_) throw std::invalid_argument("too many coefficients");
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
            v = v * p_ + c[i];
        }
        return Elem{v};
    }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return Elem{a.value ^ b.value};
        std::uint32_t x = a.value, y = b.value, r = 0;
        for (unsigned i = 0; i < m_ && (x | y); ++i) {
            r += ((x % p_ + y % p_) % p_) * radix_[i];
            x /= p_;
            y /= p_;
        }
        return Elem{r};
    }

    Elem neg(Elem a) const noexcept {
        if (p_ == 2) return a;
        std::uint32_t x = a.value, r = 0;
        for (unsigned i = 0; i < m_ && x; ++i) {
            r += ((p_ - x % p_) % p_) * radix_[i];
            x /= p_;
        }
        return Elem{r};
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    /// c * a for an integer c interpreted in GF(p).
    Elem scale(Elem a, std::uint64_t c) const noexcept {
        c %= p_;
        if (c == 0) return zero();
        if (c == 1) return a;
        std::uint32_t x = a.value, r = 0;
        for (unsigned i = 0; i < m_ && x; ++i) {
            r += static_cast<std::uint32_t>((x % p_) * c % p_) * radix_[i];
            x /= p_;
        }
        return Elem{r};
    }

    Elem mul(Elem a, Elem b) const {
        if (a.value == 0 || b.value == 0) return zero();
        if (has_tables()) {
            std::uint64_t s = std::uint64_t{log_[a.value]} + log_[b.value];
            if (s >= q_ - 1) s -= q_ - 1;
            return Elem{exp_[s]};
        }
        return mul_poly(a, b);
    }

    Elem inv(Elem a) const {
        if (a.value == 0) throw std::domain_error("inverse of zero");
        if (has_tables()) {
            const std::uint32_t l = log_[a.value];
            return Elem{exp_[l == 0 ? 0 : (q_ - 1) - l]};
        }
        return pow_slow(a, q_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::int64_t e) const {
        if (e < 0) return pow(inv(a), -e);
        if (a.value == 0) return e == 0 ? one() : zero();
        const std::uint64_t r = static_cast<std::uint64_t>(e) % (q_ - 1);
        if (has_tables()) return Elem{exp_[(std::uint64_t{log_[a.value]} * r) % (q_ - 1)]};
        return pow_slow(a, r);
    }

    /// alpha^i.
    Elem exp(std::uint64_t i) const {
        i %= (q_ - 1);
        if (has_tables()) return Elem{exp_[i]};
        return pow_slow(alpha_, i);
    }

    /// Discrete logarithm to base alpha, in [0, q-1).
    std::uint32_t log(Elem a) const {
        if (a.value == 0) throw std::domain_error("discrete log of zero");
        if (!contains(a)) throw std::invalid_argument("element outside field");
        if (has_tables()) return log_[a.value];
        return bsgs(a);
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const {
        if (a.value == 0) throw std::domain_error("order of zero");
        std::uint64_t o = q_ - 1;
        for (std::uint64_t l : order_factors_) {
            while (o % l == 0 && pow(a, static_cast<std::int64_t>(o / l)) == one()) o /= l;
        }
        return o;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << p_ << "^" << m_ << ") modulus=[";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        os << "] alpha=" << alpha_.value;
        return os.str();
    }

private:
    Elem mul_poly(Elem a, Elem b) const {
        detail::PrimePoly x = coeffs(a), y = coeffs(b);
        detail::trim(x);
        detail::trim(y);
        detail::PrimePoly r = detail::poly_mulmod(x, y, modulus_, p_);
        r.resize(m_, 0);
        return from_coeffs(r);
    }

    Elem pow_slow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t order_slow(Elem a) const {
        std::uint64_t o = q_ - 1;
        for (std::uint64_t l : order_factors_) {
            while (o % l == 0 && pow_slow(a, o / l) == one()) o /= l;
        }
        return o;
    }

    Elem find_generator() const {
        if (q_ == 2) return one();
        for (std::uint32_t v = 2; v < q_; ++v) {
            if (order_slow(Elem{v}) == q_ - 1) return Elem{v};
        }
        throw std::logic_error("no primitive element");
    }

    void build_tables() {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Elem cur = one();
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = cur.value;
            log_[cur.value] = i;
            cur = mul_poly(cur, alpha_);
        }
        if (cur != one()) throw std::logic_error("generator order mismatch");
    }

    std::uint32_t bsgs(Elem a) const {
        const std::uint64_t n = q_ - 1;
        std::uint64_t step = 1;
        while (step * step < n) ++step;
        std::unordered_map<std::uint32_t, std::uint32_t> baby;
        baby.reserve(step * 2);
        Elem cur = one();
        for (std::uint64_t j = 0; j < step; ++j) {
            baby.emplace(cur.value, static_cast<std::uint32_t>(j));
            cur = mul_poly(cur, alpha_);
        }
        const Elem giant = pow_slow(alpha_, n - (step % n));  // alpha^(-step)
        Elem gamma = a;
        for (std::uint64_t i = 0; i <= step; ++i) {
            if (auto it = baby.find(gamma.value); it != baby.end()) {
                return static_cast<std::uint32_t>((i * step + it->second) % n);
            }
            gamma = mul_poly(gamma, giant);
        }
        throw std::logic_error("discrete log not found");
    }

    unsigned p_;
    unsigned m_;
    std::uint32_t q_ = 0;
    detail::PrimePoly modulus_;
    std::vector<std::uint32_t> radix_;
    std::vector<std::uint64_t> order_factors_;
    Elem alpha_{};
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Registry field GF(p^m); instances are cached and immutable.
inline FieldPtr make_field(unsigned p, unsigned m, FieldLimits limits = {}) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    try {
        detail::checked_pow(p, m, limits.size_cap);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds cap " +
                                    std::to_string(limits.size_cap));
    }
    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, std::uint64_t, std::uint64_t>, FieldPtr> cache;
    const auto key = std::make_tuple(p, m, limits.size_cap, limits.table_threshold);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto field = std::make_shared<const Field>(p, m, registry_polynomial(p, m), limits);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(field)).first->second;
}

/// Field for an order q; throws if q is not a prime power.
inline FieldPtr make_field_of_order(std::uint64_t q, FieldLimits limits = {}) {
    auto pp = detail::prime_power(q);
    if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make_field(static_cast<unsigned>(pp->p), pp->m, limits);
}

/// Element bound to its field; arithmetic across different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
        if (!field_->contains(value_)) throw std::invalid_argument("element outside field");
    }
    FieldElement(FieldPtr field, std::uint32_t value) : FieldElement(std::move(field), Elem{value}) {}

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElement inv() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
    std::uint32_t log() const { return field_->log(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return {same(a, b), a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return {same(a, b), a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return {same(a, b), a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return {same(a, b), a.field_->div(a.value_, b.value_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    static const FieldPtr& same(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_) throw std::invalid_argument("elements belong to different fields");
        return a.field_;
    }

    FieldPtr field_;
    Elem value_;
};

/// GF(p)-rank of a list of elements viewed as coefficient vectors.
inline std::size_t gf_rank(const Field& f, const std::vector<Elem>& vecs) {
    const unsigned p = f.p();
    std::vector<std::vector<unsigned>> rows;
    for (Elem e : vecs) rows.push_back(f.coeffs(e));
    std::size_t rank = 0;
    for (unsigned col = 0; col < f.m() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const unsigned inv = detail::inv_mod_prime(rows[rank][col], p);
        for (auto& c : rows[rank]) c = static_cast<unsigned>(std::uint64_t{c} * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const unsigned factor = rows[r][col];
            for (unsigned j = 0; j < f.m(); ++j) {
                rows[r][j] = static_cast<unsigned>((rows[r][j] + std::uint64_t{p - factor} * rows[rank][j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

/// All GF(p)-linear combinations of `basis`.
inline ElemSet span(const Field& f, const std::vector<Elem>& basis) {
    std::vector<Elem> cur{f.zero()};
    for (Elem b : basis) {
        if (!f.contains(b)) throw std::invalid_argument("basis element outside field");
        std::vector<Elem> next;
        next.reserve(cur.size() * f.p());
        for (unsigned c = 0; c < f.p(); ++c) {
            const Elem cb = f.scale(b, c);
            for (Elem s : cur) next.push_back(f.add(s, cb));
        }
        cur = make_set(std::move(next));
    }
    return make_set(std::move(cur));
}

/// Extracts a GF(p)-basis of span(items), scanning items in order.
inline std::vector<Elem> extract_basis(const Field& f, const std::vector<Elem>& items) {
    std::vector<Elem> basis;
    for (Elem e : items) {
        basis.push_back(e);
        if (gf_rank(f, basis) < basis.size()) basis.pop_back();
        if (basis.size() == f.m()) break;
    }
    return basis;
}

/// A v-dimensional GF(p)-subspace of the field.
class SubspaceSpec {
public:
    SubspaceSpec(FieldPtr field, std::vector<Elem> basis) : field_(std::move(field)), basis_(std::move(basis)) {
        if (gf_rank(*field_, basis_) != basis_.size()) throw std::invalid_argument("subspace basis is dependent");
    }

    /// span(1, alpha, ..., alpha^(v-1)): the first v polynomial-basis vectors.
    static SubspaceSpec canonical(FieldPtr field, unsigned v) {
        if (v > field->m()) throw std::invalid_argument("subspace dimension exceeds m");
        std::vector<Elem> basis;
        for (unsigned i = 0; i < v; ++i) {
            std::vector<unsigned> c(field->m(), 0);
            c[i] = 1;
            basis.push_back(field->from_coeffs(c));
        }
        return SubspaceSpec(std::move(field), std::move(basis));
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& basis() const noexcept { return basis_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(basis_.size()); }
    ElemSet elements() const { return span(*field_, basis_); }

private:
    FieldPtr field_;
    std::vector<Elem> basis_;
};

inline ElemSet set_sum(const Field& f, const ElemSet& a, const ElemSet& b) {
    std::vector<Elem> out;
    out.reserve(a.size() * b.size());
    for (Elem x : a)
        for (Elem y : b) out.push_back(f.add(x, y));
    return make_set(std::move(out));
}

inline ElemSet set_product(const Field& f, const ElemSet& a, const ElemSet& b) {
    std::vector<Elem> out;
    out.reserve(a.size() * b.size());
    for (Elem x : a)
        for (Elem y : b) out.push_back(f.mul(x, y));
    return make_set(std::move(out));
}

}  // namespace rsc

template <>
struct std::hash<rsc::Elem> {
    std::size_t operator()(const rsc::Elem& e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
