#pragma once

// (w1,w2)-separable subsets of a finite field.
//
// U is additively (multiplicatively) separable when U is covered by E+F (EF)
// for some E, F contained in U with 1 <= |E| <= w1 and 1 <= |F| <= w2.  This
// header holds the witness checker, an exhaustive branch-and-bound search, and
// the explicit constructions: cyclic subgroups, splits of elementary abelian
// subgroups, the extra order-p factor construction, and the three cases for a
// whole field GF(p^s).

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rsc/finite_field.hpp"

namespace rsc {

enum class Mode { Additive, Multiplicative };

inline const char* to_string(Mode m) { return m == Mode::Additive ? "additive" : "multiplicative"; }

/// How to evaluate [w1/p^r1]*[w2/p^r2] >= p.  Floor is the integer reading
/// needed by the explicit construction; Rational compares the exact product,
/// which is equivalent to w1*w2 >= p^(r1+r2+1).
enum class BracketReading { Floor, Rational };

inline const char* to_string(BracketReading r) { return r == BracketReading::Floor ? "floor" : "rational"; }

struct SepWitness {
    Mode mode = Mode::Additive;
    ElemSet E;
    ElemSet F;
    unsigned w1 = 0;
    unsigned w2 = 0;

    friend bool operator==(const SepWitness&, const SepWitness&) = default;
};

inline Elem combine(const Field& f, Mode mode, Elem a, Elem b) {
    return mode == Mode::Additive ? f.add(a, b) : f.mul(a, b);
}

inline ElemSet combine_sets(const Field& f, Mode mode, const ElemSet& a, const ElemSet& b) {
    return mode == Mode::Additive ? set_sum(f, a, b) : set_product(f, a, b);
}

/// True iff E, F are inside U, sizes are within bounds, and U is covered.
inline bool check_witness(const Field& f, const ElemSet& U, const SepWitness& w) {
    if (w.E.empty() || w.F.empty()) return false;
    if (w.E.size() > w.w1 || w.F.size() > w.w2) return false;
    if (!is_subset(w.E, U) || !is_subset(w.F, U)) return false;
    return is_subset(U, combine_sets(f, w.mode, w.E, w.F));
}

struct SearchBudget {
    std::size_t max_set_size = 64;
    std::uint64_t max_candidates = 20'000'000;
    std::chrono::milliseconds time_cap{30'000};
};

struct NotSeparable {
    std::string reason;
};

struct BudgetExceeded {
    std::uint64_t candidates = 0;
    std::string reason;
};

using SearchResult = std::variant<SepWitness, NotSeparable, BudgetExceeded>;

namespace detail {

class CoverSearch {
public:
    CoverSearch(const Field& f, Mode mode, const ElemSet& U, const SearchBudget& budget, std::uint64_t& candidates,
                std::chrono::steady_clock::time_point deadline)
        : f_(f), mode_(mode), U_(U), budget_(budget), candidates_(candidates), deadline_(deadline) {
        index_.assign(f.q(), -1);
        for (std::size_t i = 0; i < U_.size(); ++i) index_[U_[i].value] = static_cast<int>(i);
        full_ = U_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << U_.size()) - 1;
    }

    enum class Outcome { Found, Exhausted, OutOfBudget };

    /// Looks for E, F inside U (sizes <= b1, b2) covering U.
    Outcome run(std::size_t b1, std::size_t b2) {
        b1 = std::min(b1, U_.size());
        b2 = std::min(b2, U_.size());
        if (b1 == 0 || b2 == 0) return Outcome::Exhausted;
        const std::size_t min_e = (U_.size() + b2 - 1) / b2;
        for (std::size_t size = std::max<std::size_t>(min_e, 1); size <= b1; ++size) {
            std::vector<std::size_t> comb(size);
            for (std::size_t i = 0; i < size; ++i) comb[i] = i;
            while (true) {
                if (!tick()) return Outcome::OutOfBudget;
                E_.clear();
                for (std::size_t i : comb) E_.push_back(U_[i]);
                chosen_.clear();
                const auto r = cover_dfs(0, b2);
                if (r != Outcome::Exhausted) return r;
                if (!next_combination(comb, U_.size())) break;
            }
        }
        return Outcome::Exhausted;
    }

    ElemSet E() const { return make_set(E_); }
    ElemSet F() const { return make_set(chosen_); }

private:
    static bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
        const std::size_t k = c.size();
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
    }

    bool tick() {
        ++candidates_;
        if (candidates_ > budget_.max_candidates) return false;
        if ((candidates_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) return false;
        return true;
    }

    std::uint64_t coverage(Elem fv) const {
        std::uint64_t mask = 0;
        for (Elem e : E_) {
            const int idx = index_[combine(f_, mode_, e, fv).value];
            if (idx >= 0) mask |= std::uint64_t{1} << idx;
        }
        return mask;
    }

    // Branch on the lowest uncovered element u: some f in F must satisfy e o f = u.
    Outcome cover_dfs(std::uint64_t covered, std::size_t remaining) {
        if (covered == full_) return Outcome::Found;
        if (remaining == 0) return Outcome::Exhausted;
        if (!tick()) return Outcome::OutOfBudget;
        int u = 0;
        while (covered >> u & 1) ++u;
        const Elem target = U_[static_cast<std::size_t>(u)];
        std::vector<Elem> options;
        for (Elem e : E_) {
            Elem fv;
            if (mode_ == Mode::Additive) {
                fv = f_.sub(target, e);
            } else {
                if (e.value == 0) continue;
                fv = f_.div(target, e);
            }
            if (index_[fv.value] < 0) continue;
            if (std::find(chosen_.begin(), chosen_.end(), fv) != chosen_.end()) continue;
            options.push_back(fv);
        }
        options = make_set(std::move(options));
        for (Elem fv : options) {
            chosen_.push_back(fv);
            const auto r = cover_dfs(covered | coverage(fv), remaining - 1);
            if (r != Outcome::Exhausted) return r;
            chosen_.pop_back();
        }
        return Outcome::Exhausted;
    }

    const Field& f_;
    Mode mode_;
    const ElemSet& U_;
    const SearchBudget& budget_;
    std::uint64_t& candidates_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> index_;
    std::uint64_t full_ = 0;
    std::vector<Elem> E_;
    std::vector<Elem> chosen_;
};

}  // namespace detail

/// Exhaustive search for a separating witness of U.  NotSeparable is a proof
/// (the search covered every candidate); BudgetExceeded is inconclusive.
inline SearchResult search_separable(const Field& f, const ElemSet& U, unsigned w1, unsigned w2, Mode mode,
                                     const SearchBudget& budget = {}) {
    if (U.empty()) throw std::invalid_argument("search_separable needs a nonempty set");
    for (Elem e : U) {
        if (!f.contains(e)) throw std::invalid_argument("set element outside field");
    }
    if (w1 < 1 || w2 < 1) return NotSeparable{"coalition bound below 1"};
    if (U.size() > std::uint64_t{w1} * w2) return NotSeparable{"|U| > w1*w2"};

    const bool has_zero = U.front().value == 0;
    if (mode == Mode::Multiplicative && has_zero && U.size() == 1) {
        return SepWitness{mode, U, U, w1, w2};
    }
    const ElemSet work = (mode == Mode::Multiplicative && has_zero) ? ElemSet(U.begin() + 1, U.end()) : U;
    if (work.size() > std::min<std::size_t>(budget.max_set_size, 64)) {
        return BudgetExceeded{0, "set larger than search limit"};
    }

    std::uint64_t candidates = 0;
    const auto deadline = std::chrono::steady_clock::now() + budget.time_cap;
    auto attempt = [&](std::size_t b1, std::size_t b2) {
        detail::CoverSearch s(f, mode, work, budget, candidates, deadline);
        const auto out = s.run(b1, b2);
        return std::make_pair(out, std::make_pair(s.E(), s.F()));
    };

    using Outcome = detail::CoverSearch::Outcome;
    if (mode == Mode::Additive || !has_zero) {
        auto [out, ef] = attempt(w1, w2);
        if (out == Outcome::Found) return SepWitness{mode, ef.first, ef.second, w1, w2};
        if (out == Outcome::OutOfBudget) return BudgetExceeded{candidates, "candidate or time budget exhausted"};
        return NotSeparable{"exhaustive search found no cover"};
    }

    // 0 in U, multiplicative: 0 only covers itself, so it sits in F or in E
    // and the nonzero part must be covered by nonzero elements.
    bool out_of_budget = false;
    if (w2 >= 2) {
        auto [out, ef] = attempt(w1, w2 - 1);
        if (out == Outcome::Found) {
            ElemSet F = ef.second;
            F.insert(F.begin(), f.zero());
            return SepWitness{mode, ef.first, F, w1, w2};
        }
        out_of_budget |= out == Outcome::OutOfBudget;
    }
    if (w1 >= 2) {
        auto [out, ef] = attempt(w1 - 1, w2);
        if (out == Outcome::Found) {
            ElemSet E = ef.first;
            E.insert(E.begin(), f.zero());
            return SepWitness{mode, E, ef.second, w1, w2};
        }
        out_of_budget |= out == Outcome::OutOfBudget;
    }
    if (out_of_budget) return BudgetExceeded{candidates, "candidate or time budget exhausted"};
    return NotSeparable{"exhaustive search found no cover"};
}

/// <gamma> as a set.
inline ElemSet cyclic_subgroup(const Field& f, Elem gamma) {
    std::vector<Elem> out{f.one()};
    for (Elem cur = f.mul(f.one(), gamma); cur != f.one(); cur = f.mul(cur, gamma)) out.push_back(cur);
    return make_set(std::move(out));
}

/// E = {gamma^(i w2) : i < w1}, F = {gamma^j : j < w2} covers <gamma> when t <= w1 w2.
inline std::optional<SepWitness> witness_mult_cyclic(const Field& f, Elem gamma, std::uint64_t t, unsigned w1,
                                                     unsigned w2) {
    if (gamma.value == 0 || f.order(gamma) != t)
        throw std::invalid_argument("generator does not have order " + std::to_string(t));
    if (w1 < 1 || w2 < 1 || t > std::uint64_t{w1} * w2) return std::nullopt;
    std::vector<Elem> E, F;
    for (unsigned i = 0; i < w1; ++i) E.push_back(f.pow(gamma, static_cast<std::int64_t>(i) * w2));
    for (unsigned j = 0; j < w2; ++j) F.push_back(f.pow(gamma, j));
    return SepWitness{Mode::Multiplicative, make_set(std::move(E)), make_set(std::move(F)), w1, w2};
}

struct SplitExponents {
    unsigned r1 = 0;
    unsigned r2 = 0;
};

inline SplitExponents split_exponents(unsigned p, unsigned w1, unsigned w2) {
    return {detail::floor_log(w1, p), detail::floor_log(w2, p)};
}

/// [w1/p^r1]*[w2/p^r2] >= p under the chosen reading.
inline bool bracket_condition(unsigned p, unsigned w1, unsigned w2, BracketReading reading) {
    const auto [r1, r2] = split_exponents(p, w1, w2);
    const std::uint64_t p1 = detail::checked_pow(p, r1), p2 = detail::checked_pow(p, r2);
    if (reading == BracketReading::Floor) return (w1 / p1) * (w2 / p2) >= p;
    return std::uint64_t{w1} * w2 >= p1 * p2 * p;
}

inline bool bracket_readings_differ(unsigned p, unsigned w1, unsigned w2) {
    return bracket_condition(p, w1, w2, BracketReading::Floor) != bracket_condition(p, w1, w2, BracketReading::Rational);
}

/// H = span(basis) with dim H <= r1 + r2: E = span(first min(r1, s)), F = span(rest).
inline std::optional<SepWitness> witness_subgroup_split(const Field& f, const std::vector<Elem>& basis, unsigned w1,
                                                        unsigned w2) {
    if (w1 < 1 || w2 < 1) return std::nullopt;
    if (gf_rank(f, basis) != basis.size()) throw std::invalid_argument("subgroup basis is dependent");
    const auto [r1, r2] = split_exponents(f.p(), w1, w2);
    if (basis.size() > r1 + r2) return std::nullopt;
    const std::size_t d1 = std::min<std::size_t>(r1, basis.size());
    std::vector<Elem> first(basis.begin(), basis.begin() + static_cast<long>(d1));
    std::vector<Elem> second(basis.begin() + static_cast<long>(d1), basis.end());
    return SepWitness{Mode::Additive, span(f, first), span(f, second), w1, w2};
}

/// H = span(basis) with dim H = r1 + r2 exactly: E = span(first r1), F = span(last r2).
inline std::optional<SepWitness> witness_add_subgroups(const Field& f, const std::vector<Elem>& basis, unsigned w1,
                                                       unsigned w2) {
    if (w1 < 1 || w2 < 1) return std::nullopt;
    const auto [r1, r2] = split_exponents(f.p(), w1, w2);
    if (basis.size() != r1 + r2) return std::nullopt;
    return witness_subgroup_split(f, basis, w1, w2);
}

/// dim H = r1 + r2 + 1 and floored bracket >= p: E' = E + P1, F' = F + P2 where
/// P1 = {(i*b2) g : i < b1}, P2 = {j g : j < b2}, b_i = floor(w_i / p^r_i), g the last basis vector.
inline std::optional<SepWitness> witness_prop32(const Field& f, const std::vector<Elem>& basis, unsigned w1,
                                                unsigned w2) {
    if (w1 < 1 || w2 < 1) return std::nullopt;
    if (gf_rank(f, basis) != basis.size()) throw std::invalid_argument("subgroup basis is dependent");
    const unsigned p = f.p();
    const auto [r1, r2] = split_exponents(p, w1, w2);
    if (basis.size() != r1 + r2 + 1) return std::nullopt;
    if (!bracket_condition(p, w1, w2, BracketReading::Floor)) return std::nullopt;
    const std::uint64_t b1 = w1 / detail::checked_pow(p, r1), b2 = w2 / detail::checked_pow(p, r2);
    const Elem g = basis.back();
    std::vector<Elem> P1, P2;
    for (std::uint64_t i = 0; i < b1; ++i) P1.push_back(f.scale(g, i * b2));
    for (std::uint64_t j = 0; j < b2; ++j) P2.push_back(f.scale(g, j));
    std::vector<Elem> first(basis.begin(), basis.begin() + r1), second(basis.begin() + r1, basis.begin() + r1 + r2);
    return SepWitness{Mode::Additive, set_sum(f, span(f, first), make_set(P1)),
                      set_sum(f, span(f, second), make_set(P2)), w1, w2};
}

/// Which of the three field-separability cases holds for GF(p^s) (1-based), if any.
/// Case 2 only applies for s <= r1+r2+1; beyond that p^s > w1*w2 and no cover exists.
inline std::optional<int> lemma31_case(unsigned p, unsigned s, unsigned w1, unsigned w2,
                                       BracketReading reading = BracketReading::Floor) {
    if (w1 < 1 || w2 < 1) return std::nullopt;
    const auto [r1, r2] = split_exponents(p, w1, w2);
    if (s <= r1 + r2) return 1;
    if (s == r1 + r2 + 1 && bracket_condition(p, w1, w2, reading)) return 2;
    std::uint64_t ps = 0;
    try {
        ps = detail::checked_pow(p, s, std::uint64_t{1} << 40);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
    if (std::uint64_t{w1} * w2 >= ps + w2) return 3;
    return std::nullopt;
}

/// Witness that GF(p^s) (the registry field make_field(p, s)) is (w1,w2)-separable.
inline std::optional<SepWitness> field_separable_lemma31(unsigned p, unsigned s, unsigned w1, unsigned w2) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const auto which = lemma31_case(p, s, w1, w2, BracketReading::Floor);
    if (!which) return std::nullopt;
    const FieldPtr field = make_field(p, s);
    const Field& f = *field;
    const std::vector<Elem> basis = SubspaceSpec::canonical(field, s).basis();

    if (*which == 1) return witness_subgroup_split(f, basis, w1, w2);
    if (*which == 2) return witness_prop32(f, basis, w1, w2);

    // Multiplicative: exponent intervals of alpha, with 0 added to one side.
    const std::uint64_t units = f.q() - 1;
    std::vector<Elem> E, F;
    if (std::uint64_t{w1} * (w2 - 1) >= units && w2 >= 2) {
        for (unsigned i = 0; i < w1; ++i) E.push_back(f.exp(std::uint64_t{i} * (w2 - 1)));
        for (unsigned j = 0; j + 1 < w2; ++j) F.push_back(f.exp(j));
        F.push_back(f.zero());
    } else {
        // (w1-1)*w2 >= q-1 follows from w1*w2 - w2 >= q.
        for (unsigned i = 0; i + 1 < w1; ++i) E.push_back(f.exp(std::uint64_t{i} * w2));
        E.push_back(f.zero());
        for (unsigned j = 0; j < w2; ++j) F.push_back(f.exp(j));
    }
    return SepWitness{Mode::Multiplicative, make_set(std::move(E)), make_set(std::move(F)), w1, w2};
}

}  // namespace rsc
