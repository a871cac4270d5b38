#pragma once

// Brute-force ground truth for small explicit codes: descendant sets, and the
// (w1,w2)-separating, w-IPP and w-TA properties.  Also the linear-code
// non-separation witness built from a separable codeword image.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rsc/detail/parallel.hpp"
#include "rsc/finite_field.hpp"
#include "rsc/rs_code.hpp"
#include "rsc/separability.hpp"

namespace rsc {

class ExplicitCode {
public:
    ExplicitCode(FieldPtr field, std::vector<Word> words) : field_(std::move(field)), words_(std::move(words)) {
        if (words_.empty()) throw std::invalid_argument("code has no words");
        n_ = words_.front().size();
        if (n_ < 2) throw std::invalid_argument("code length must be >= 2");
        for (const Word& w : words_) {
            if (w.size() != n_) throw std::invalid_argument("codewords have different lengths");
            for (Elem e : w)
                if (!field_->contains(e)) throw std::invalid_argument("codeword symbol outside field");
        }
        std::vector<Word> sorted = words_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate codeword");
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::size_t length() const noexcept { return n_; }

private:
    FieldPtr field_;
    std::vector<Word> words_;
    std::size_t n_ = 0;
};

inline std::size_t hamming(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline std::size_t minimum_distance(const ExplicitCode& c) {
    std::size_t best = c.length();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, hamming(c.words()[i], c.words()[j]));
    return best;
}

/// x in desc(U): every x_i occurs at position i in some member of U.
inline bool in_descendant(const Word& x, const std::vector<Word>& U) {
    if (U.empty()) return false;
    for (const Word& y : U)
        if (y.size() != x.size()) throw std::invalid_argument("length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::none_of(U.begin(), U.end(), [&](const Word& y) { return y[i] == x[i]; })) return false;
    }
    return true;
}

/// Lazily walks desc(U) in odometer order (position 0 fastest).
class DescendantEnumerator {
public:
    DescendantEnumerator(const std::vector<Word>& U, std::uint64_t guard = 10'000'000) {
        if (U.empty()) throw std::invalid_argument("descendant set of empty coalition");
        const std::size_t n = U.front().size();
        for (const Word& y : U)
            if (y.size() != n) throw std::invalid_argument("length mismatch");
        alphabets_.resize(n);
        total_ = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Elem> a;
            for (const Word& y : U) a.push_back(y[i]);
            alphabets_[i] = make_set(std::move(a));
            if (total_ > guard / alphabets_[i].size())
                throw std::invalid_argument("descendant set exceeds guard " + std::to_string(guard));
            total_ *= alphabets_[i].size();
        }
        pos_.assign(n, 0);
    }

    std::uint64_t size() const noexcept { return total_; }

    bool next(Word& out) {
        if (done_) return false;
        out.resize(pos_.size());
        for (std::size_t i = 0; i < pos_.size(); ++i) out[i] = alphabets_[i][pos_[i]];
        std::size_t i = 0;
        while (i < pos_.size() && ++pos_[i] == alphabets_[i].size()) pos_[i++] = 0;
        if (i == pos_.size()) done_ = true;
        return true;
    }

private:
    std::vector<ElemSet> alphabets_;
    std::vector<std::size_t> pos_;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

inline std::vector<Word> descendant_set(const std::vector<Word>& U, std::uint64_t guard = 10'000'000) {
    DescendantEnumerator en(U, guard);
    std::vector<Word> out;
    out.reserve(en.size());
    Word x;
    while (en.next(x)) out.push_back(x);
    return out;
}

struct NonSepWitness {
    std::vector<Word> U1;
    std::vector<Word> U2;
    Word x;
};

/// Disjoint, within size bounds, nonempty, and x is a common descendant.
inline bool check_nonsep(const NonSepWitness& w, unsigned w1, unsigned w2) {
    if (w.U1.empty() || w.U2.empty() || w.U1.size() > w1 || w.U2.size() > w2) return false;
    for (const Word& a : w.U1)
        if (std::find(w.U2.begin(), w.U2.end(), a) != w.U2.end()) return false;
    return in_descendant(w.x, w.U1) && in_descendant(w.x, w.U2);
}

/// check_nonsep plus membership of every coalition word in `code`.
inline bool check_nonsep(const NonSepWitness& w, unsigned w1, unsigned w2, const ExplicitCode& code) {
    if (!check_nonsep(w, w1, w2)) return false;
    auto member = [&](const Word& y) {
        return std::find(code.words().begin(), code.words().end(), y) != code.words().end();
    };
    return std::all_of(w.U1.begin(), w.U1.end(), member) && std::all_of(w.U2.begin(), w.U2.end(), member);
}

struct Guard {
    /// Upper bound on elementary checks before giving up.
    std::uint64_t max_work = 100'000'000;
    unsigned workers = 1;
};

struct Holds {};
struct GuardExceeded {
    std::uint64_t estimate = 0;
};
struct SeparatingFails {
    NonSepWitness witness;
};
struct IppFails {
    Word x;
    std::vector<std::vector<Word>> coalitions;  // their intersection is empty
};
struct TaFails {
    Word x;
    std::vector<Word> coalition;
    Word outsider;  // at least as close to x as every member of the coalition
};

using SeparatingResult = std::variant<Holds, SeparatingFails, GuardExceeded>;
using IppResult = std::variant<Holds, IppFails, GuardExceeded>;
using TaResult = std::variant<Holds, TaFails, GuardExceeded>;

namespace detail {

/// Per-position symbol bitmaps for fast coalition alphabet unions.
class AlphabetMasks {
public:
    explicit AlphabetMasks(const ExplicitCode& c)
        : n_(c.length()), blocks_((c.field()->q() + 63) / 64), masks_(c.size() * n_ * blocks_, 0) {
        for (std::size_t w = 0; w < c.size(); ++w)
            for (std::size_t i = 0; i < n_; ++i) {
                const std::uint32_t s = c.words()[w][i].value;
                masks_[(w * n_ + i) * blocks_ + s / 64] |= std::uint64_t{1} << (s % 64);
            }
    }

    std::vector<std::uint64_t> union_of(const std::vector<std::size_t>& members) const {
        std::vector<std::uint64_t> out(n_ * blocks_, 0);
        for (std::size_t w : members)
            for (std::size_t j = 0; j < n_ * blocks_; ++j) out[j] |= masks_[w * n_ * blocks_ + j];
        return out;
    }

    /// Per position, smallest symbol present in both unions; empty if some position has none.
    std::optional<std::vector<std::uint32_t>> common(const std::vector<std::uint64_t>& a,
                                                     const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint32_t> x(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            bool found = false;
            for (std::size_t k = 0; k < blocks_ && !found; ++k) {
                const std::uint64_t m = a[i * blocks_ + k] & b[i * blocks_ + k];
                if (m) {
                    x[i] = static_cast<std::uint32_t>(k * 64 + static_cast<unsigned>(__builtin_ctzll(m)));
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
        return x;
    }

private:
    std::size_t n_;
    std::size_t blocks_;
    std::vector<std::uint64_t> masks_;
};

inline std::vector<Word> pick(const ExplicitCode& c, const std::vector<std::size_t>& idx) {
    std::vector<Word> out;
    for (std::size_t i : idx) out.push_back(c.words()[i]);
    return out;
}

inline bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

}  // namespace detail

/// Exhaustive over disjoint coalition pairs, U1 in size-major lexicographic
/// order; the first pair with a common descendant is returned.
inline SeparatingResult is_separating(const ExplicitCode& c, unsigned w1, unsigned w2, const Guard& guard = {}) {
    const std::uint64_t n1 = detail::count_subsets_up_to(c.size(), w1);
    const std::uint64_t n2 = detail::count_subsets_up_to(c.size(), w2);
    const long double est = static_cast<long double>(n1) * n2 * c.length();
    if (est > guard.max_work) return GuardExceeded{static_cast<std::uint64_t>(std::min<long double>(est, 1e19L))};

    const detail::AlphabetMasks masks(c);
    const auto outer = detail::subsets_up_to(c.size(), w1);
    const auto inner = detail::subsets_up_to(c.size(), w2);
    std::vector<std::vector<std::uint64_t>> inner_masks;
    inner_masks.reserve(inner.size());
    for (const auto& s : inner) inner_masks.push_back(masks.union_of(s));

    auto first_partner = [&](std::size_t oi) -> std::optional<std::size_t> {
        const auto a = masks.union_of(outer[oi]);
        for (std::size_t ii = 0; ii < inner.size(); ++ii) {
            if (!detail::disjoint(outer[oi], inner[ii])) continue;
            if (masks.common(a, inner_masks[ii])) return ii;
        }
        return std::nullopt;
    };
    const std::size_t hit =
        detail::parallel_first(outer.size(), guard.workers, [&](std::size_t oi) { return first_partner(oi).has_value(); });
    if (hit == outer.size()) return Holds{};

    const std::size_t ii = *first_partner(hit);
    const auto x = *masks.common(masks.union_of(outer[hit]), inner_masks[ii]);
    NonSepWitness w{detail::pick(c, outer[hit]), detail::pick(c, inner[ii]), {}};
    for (std::uint32_t s : x) w.x.push_back(Elem{s});
    if (!check_nonsep(w, w1, w2, c)) throw std::logic_error("separating witness failed re-verification");
    return SeparatingFails{std::move(w)};
}

namespace detail {

inline std::uint64_t word_key(const Word& x, std::uint64_t q) {
    std::uint64_t k = 0;
    for (auto it = x.rbegin(); it != x.rend(); ++it) k = k * q + it->value;
    return k;
}

inline std::uint64_t descendant_work(const ExplicitCode& c, unsigned w) {
    const std::uint64_t coalitions = count_subsets_up_to(c.size(), w);
    long double per = 1;
    for (std::size_t i = 0; i < c.length(); ++i) per *= std::min<std::uint64_t>(w, c.field()->q());
    const long double est = static_cast<long double>(coalitions) * per * c.length();
    return est > 1e19L ? UINT64_MAX : static_cast<std::uint64_t>(est);
}

}  // namespace detail

/// w-IPP by brute force.  Codes are limited to 64 words (coalitions are bitmasks).
inline IppResult is_ipp(const ExplicitCode& c, unsigned w, const Guard& guard = {}) {
    const std::uint64_t est = detail::descendant_work(c, w);
    if (c.size() > 64 || est > guard.max_work) return GuardExceeded{est};
    long double key_space = 1;
    for (std::size_t i = 0; i < c.length(); ++i) key_space *= c.field()->q();
    if (key_space > 1.8e19L) return GuardExceeded{est};

    const auto coalitions = detail::subsets_up_to(c.size(), w);
    std::unordered_map<std::uint64_t, std::uint64_t> meet;
    for (const auto& coal : coalitions) {
        std::uint64_t mask = 0;
        for (std::size_t i : coal) mask |= std::uint64_t{1} << i;
        DescendantEnumerator en(detail::pick(c, coal));
        Word x;
        while (en.next(x)) {
            auto [it, fresh] = meet.try_emplace(detail::word_key(x, c.field()->q()), mask);
            if (!fresh) it->second &= mask;
        }
    }
    std::optional<std::uint64_t> bad;
    for (const auto& [key, mask] : meet)
        if (mask == 0 && (!bad || key < *bad)) bad = key;
    if (!bad) return Holds{};

    IppFails fail;
    fail.x.resize(c.length());
    std::uint64_t k = *bad;
    for (std::size_t i = 0; i < c.length(); ++i) {
        fail.x[i] = Elem{static_cast<std::uint32_t>(k % c.field()->q())};
        k /= c.field()->q();
    }
    std::uint64_t current = ~std::uint64_t{0};
    for (const auto& coal : coalitions) {
        const auto words = detail::pick(c, coal);
        if (!in_descendant(fail.x, words)) continue;
        std::uint64_t mask = 0;
        for (std::size_t i : coal) mask |= std::uint64_t{1} << i;
        if ((current & mask) == current) continue;
        current &= mask;
        fail.coalitions.push_back(words);
        if (current == 0) break;
    }
    return fail;
}

/// w-TA by brute force: for each coalition U and x in desc(U), some member of
/// U must be strictly closer to x than every codeword outside U.
inline TaResult is_ta(const ExplicitCode& c, unsigned w, const Guard& guard = {}) {
    const std::uint64_t est = detail::descendant_work(c, w) * std::max<std::size_t>(c.size(), 1);
    if (est > guard.max_work) return GuardExceeded{est};
    const auto coalitions = detail::subsets_up_to(c.size(), w);

    auto check = [&](std::size_t ci) -> std::optional<TaFails> {
        const auto& coal = coalitions[ci];
        if (coal.size() == c.size()) return std::nullopt;
        const auto members = detail::pick(c, coal);
        DescendantEnumerator en(members);
        Word x;
        while (en.next(x)) {
            std::size_t best_out = SIZE_MAX, best_out_idx = 0;
            for (std::size_t z = 0; z < c.size(); ++z) {
                if (std::find(coal.begin(), coal.end(), z) != coal.end()) continue;
                const std::size_t d = hamming(x, c.words()[z]);
                if (d < best_out) {
                    best_out = d;
                    best_out_idx = z;
                }
            }
            const bool traced = std::any_of(members.begin(), members.end(),
                                            [&](const Word& y) { return hamming(x, y) < best_out; });
            if (!traced) return TaFails{x, members, c.words()[best_out_idx]};
        }
        return std::nullopt;
    };
    const std::size_t hit =
        detail::parallel_first(coalitions.size(), guard.workers, [&](std::size_t i) { return check(i).has_value(); });
    if (hit == coalitions.size()) return Holds{};
    return *check(hit);
}

/// Non-separation witness for a linear code containing the all-ones word and c,
/// given a separable cover of Im c.
///
/// Additive: U1 = {b*1 : b in E}, U2 = {c - g*1 : g in F}, x_i = b_i where c_i = b_i + g_i.
/// Multiplicative: U1 = {b*1 : b in E}, U2 = {g^-1 c : g in F, g != 0}, x_i = b_i where
/// c_i = b_i g_i; zero positions take b_i = 0, which needs 0 in E.  When 0 lies
/// only in F the roles swap: U1 = {b^-1 c : b in E}, U2 = {g*1 : g in F}, x_i = g_i.
inline NonSepWitness witness_from_separable_image(const Field& f, const Word& c, const SepWitness& sep) {
    const ElemSet im = word_image(c);
    if (im.size() < 2) throw std::invalid_argument("codeword image must have at least two elements");
    if (!check_witness(f, im, sep)) throw std::invalid_argument("witness does not certify Im c");
    const std::size_t n = c.size();
    auto constant = [&](Elem b) { return Word(n, b); };
    auto scaled = [&](Elem s) {
        Word out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f.mul(s, c[i]);
        return out;
    };

    NonSepWitness w;
    w.x.resize(n);
    if (sep.mode == Mode::Additive) {
        for (Elem b : sep.E) w.U1.push_back(constant(b));
        for (Elem g : sep.F) {
            Word v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = f.sub(c[i], g);
            w.U2.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto it = std::find_if(sep.E.begin(), sep.E.end(),
                                   [&](Elem b) { return set_contains(sep.F, f.sub(c[i], b)); });
            w.x[i] = *it;
        }
    } else {
        const bool zero_in_image = set_contains(im, f.zero());
        const bool zero_in_E = set_contains(sep.E, f.zero());
        if (!zero_in_image || zero_in_E) {
            for (Elem b : sep.E) w.U1.push_back(constant(b));
            for (Elem g : sep.F)
                if (g.value != 0) w.U2.push_back(scaled(f.inv(g)));
            for (std::size_t i = 0; i < n; ++i) {
                if (c[i].value == 0) {
                    w.x[i] = f.zero();
                    continue;
                }
                auto it = std::find_if(sep.E.begin(), sep.E.end(), [&](Elem b) {
                    return b.value != 0 && set_contains(sep.F, f.div(c[i], b));
                });
                w.x[i] = *it;
            }
        } else {
            for (Elem b : sep.E) w.U1.push_back(scaled(f.inv(b)));
            for (Elem g : sep.F) w.U2.push_back(constant(g));
            for (std::size_t i = 0; i < n; ++i) {
                if (c[i].value == 0) {
                    w.x[i] = f.zero();
                    continue;
                }
                auto it = std::find_if(sep.F.begin(), sep.F.end(), [&](Elem g) {
                    return g.value != 0 && set_contains(sep.E, f.div(c[i], g));
                });
                w.x[i] = *it;
            }
        }
    }
    if (!check_nonsep(w, sep.w1, sep.w2)) throw std::logic_error("constructed witness failed re-verification");
    return w;
}

}  // namespace rsc
