#pragma once

// Rule chain for "is RS_k(q) (w1,w2)-separating at k = ceil((q-1)/(w1 w2)) + 1?".
//
// Rules, in precedence order:
//   T1.1  k-1 divides q-1                       (multiplicative subgroup image)
//   T1.2  w1 = w2 = w and (w^2 > q or w | q)
//   P2.1  w1 w2 divides q
//   T3.1  k-1 divides q, q/(k-1) = p^s, and s <= r1+r2 or the bracket condition
//   T4.1  p = 2, v = best_v(w1, w2), L(k, v) > v  (subspace subcode bound)
// A verdict is Trivial iff w1 w2 >= q, Resolved when some rule fires, Pending otherwise.

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsc/collusion.hpp"
#include "rsc/detail/number_theory.hpp"
#include "rsc/detail/parallel.hpp"
#include "rsc/finite_field.hpp"
#include "rsc/rs_code.hpp"
#include "rsc/separability.hpp"
#include "rsc/subspace_subcode.hpp"

namespace rsc {

enum class Rule { T1_1, T1_2, P2_1, T3_1, T4_1, BruteForce };
enum class Status { Trivial, Resolved, Pending };

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::T1_1: return "T1.1";
        case Rule::T1_2: return "T1.2";
        case Rule::P2_1: return "P2.1";
        case Rule::T3_1: return "T3.1";
        case Rule::T4_1: return "T4.1";
        case Rule::BruteForce: return "BruteForce";
    }
    return "?";
}

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Trivial: return "trivial";
        case Status::Resolved: return "resolved";
        case Status::Pending: return "pending";
    }
    return "?";
}

/// Grid cell label.
inline std::string table_label(Status s, std::optional<Rule> r) {
    if (s == Status::Trivial) return "*";
    if (s == Status::Pending || !r) return "-";
    switch (*r) {
        case Rule::T1_1: return "[fcsd]";
        case Rule::T1_2:
        case Rule::P2_1: return "[mfs]";
        case Rule::T3_1: return "3.1";
        case Rule::T4_1: return "4.1";
        case Rule::BruteForce: return "bf";
    }
    return "?";
}

struct RuleCheck {
    Rule rule = Rule::T1_1;
    bool fires = false;
    std::string detail;
};

struct Verdict {
    std::uint64_t q = 0;
    unsigned w1 = 0;
    unsigned w2 = 0;
    std::uint64_t k = 0;
    unsigned p = 0;
    unsigned m = 0;
    Status status = Status::Pending;
    std::optional<Rule> attributed_rule;
    std::vector<Rule> all_applicable_rules;
    BracketReading reading = BracketReading::Rational;
    std::vector<RuleCheck> checks;
    std::string floor_label;
    std::string rational_label;

    /// Separable cover behind the attributed rule and the order of the field it lives in.
    std::optional<SepWitness> witness;
    std::uint64_t witness_field_order = 0;
    std::string certificate;
    /// Set when the linear-code non-separation witness was built and re-verified.
    bool nonsep_verified = false;
    std::optional<NonSepWitness> nonsep;
    std::optional<SsrsDims> ssrs;
    std::vector<std::string> notes;

    std::string label() const { return table_label(status, attributed_rule); }
    bool bracket_discrepancy() const { return floor_label != rational_label; }
};

struct ClassifyOptions {
    BracketReading reading = BracketReading::Rational;
    bool materialize = true;
    /// Witnesses are built and checked for q up to this order.
    std::uint64_t witness_cap = 4096;
    /// exact_K is attached to T4.1 verdicts when m <= 12 and m*k <= this many unknowns.
    std::uint64_t exact_cols_cap = 20'000;
};

namespace detail {

struct RuleEval {
    std::vector<RuleCheck> checks;
    std::optional<unsigned> v;
    std::optional<SsrsDims> dims;
    std::optional<unsigned> s;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline RuleEval evaluate_rules(std::uint64_t q, unsigned p, unsigned m, unsigned w1, unsigned w2, std::uint64_t k,
                               BracketReading reading) {
    RuleEval ev;
    const std::uint64_t km1 = k - 1;
    const std::uint64_t w = std::uint64_t{w1} * w2;
    {
        const bool fires = (q - 1) % km1 == 0;
        ev.checks.push_back({Rule::T1_1, fires,
                             "k-1=" + std::to_string(km1) + " divides q-1=" + std::to_string(q - 1) + ": " + yes_no(fires)});
    }
    {
        RuleCheck c{Rule::T1_2, false, {}};
        if (w1 != w2) {
            c.detail = "needs w1 = w2";
        } else {
            const bool sq = std::uint64_t{w1} * w1 > q, div = q % w1 == 0;
            c.fires = sq || div;
            c.detail = "w^2=" + std::to_string(std::uint64_t{w1} * w1) + " > q: " + yes_no(sq) + "; w=" +
                       std::to_string(w1) + " divides q: " + yes_no(div);
        }
        ev.checks.push_back(c);
    }
    {
        const bool fires = q % w == 0;
        ev.checks.push_back(
            {Rule::P2_1, fires, "w1*w2=" + std::to_string(w) + " divides q=" + std::to_string(q) + ": " + yes_no(fires)});
    }
    {
        RuleCheck c{Rule::T3_1, false, {}};
        if (q % km1 != 0) {
            c.detail = "k-1=" + std::to_string(km1) + " divides q: no";
        } else {
            const unsigned s = m - floor_log(km1, p);
            ev.s = s;
            const auto [r1, r2] = split_exponents(p, w1, w2);
            const bool small = s <= r1 + r2;
            const bool bracket = bracket_condition(p, w1, w2, reading);
            c.fires = small || bracket;
            std::ostringstream os;
            os << "k-1=" << km1 << " divides q: yes; q/(k-1)=" << p << "^" << s << "; r1+r2=" << r1 + r2
               << "; s<=r1+r2: " << yes_no(small) << "; bracket(" << to_string(reading) << "): " << yes_no(bracket);
            c.detail = os.str();
        }
        ev.checks.push_back(c);
    }
    {
        RuleCheck c{Rule::T4_1, false, {}};
        if (p != 2) {
            c.detail = "needs p=2";
        } else {
            ev.v = best_v(w1, w2, reading);
            if (!ev.v) {
                c.detail = "no admissible v";
            } else {
                ev.dims = lower_bound_L(m, k, *ev.v);
                c.fires = ev.dims->L > static_cast<long>(*ev.v);
                const auto floor_case = lemma31_case(2, *ev.v, w1, w2, BracketReading::Floor);
                const std::string which = floor_case ? std::to_string(*floor_case)
                                                     : std::to_string(*lemma31_case(2, *ev.v, w1, w2, reading)) +
                                                           ", rational reading only";
                c.detail = "v=" + std::to_string(*ev.v) + " (field case " + which + "); L(" +
                           std::to_string(k) + "," + std::to_string(*ev.v) + ")=" + std::to_string(ev.dims->L) +
                           " > v: " + yes_no(c.fires);
            }
        }
        ev.checks.push_back(c);
    }
    return ev;
}

inline std::string first_label(const RuleEval& ev) {
    for (const auto& c : ev.checks)
        if (c.fires) return table_label(Status::Resolved, c.rule);
    return table_label(Status::Pending, std::nullopt);
}

inline std::string describe_poly(const Polynomial& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i].value;
    os << "]";
    return os.str();
}

inline void attach_witness(Verdict& v, const RuleEval& ev, const ClassifyOptions& opt) {
    const FieldPtr field = make_field(v.p, v.m);
    const Field& f = *field;
    const Rule rule = *v.attributed_rule;

    auto finish_linear = [&](const Polynomial& poly, const SepWitness& sep) {
        v.witness = sep;
        v.witness_field_order = v.q;
        const RsSpec spec(field, static_cast<std::uint32_t>(v.k));
        const Word c = encode(spec, poly);
        const NonSepWitness nw = witness_from_separable_image(f, c, sep);
        v.nonsep_verified = check_nonsep(nw, v.w1, v.w2);
        v.nonsep = nw;
        if (!v.nonsep_verified) v.notes.push_back("non-separation witness failed verification");
    };

    if (rule == Rule::T1_1) {
        const std::uint64_t t = (v.q - 1) / (v.k - 1);
        const Elem gamma = f.exp(v.k - 1);
        const auto sep = witness_mult_cyclic(f, gamma, t, v.w1, v.w2);
        if (!sep) {
            v.notes.push_back("subgroup of order " + std::to_string(t) + " exceeds w1*w2");
            return;
        }
        const Polynomial poly = Polynomial::monomial(f, v.k - 1, f.one());
        v.certificate = "f(x)=x^" + std::to_string(v.k - 1) + "; Im f* = <alpha^" + std::to_string(v.k - 1) +
                        "> of order " + std::to_string(t);
        finish_linear(poly, *sep);
        return;
    }

    if (rule == Rule::T1_2 || rule == Rule::P2_1 || rule == Rule::T3_1) {
        // k-1 = p^t: the subspace polynomial of a t-dimensional subspace is additive
        // of degree k-1 with image an additive subgroup of order q/(k-1).
        const unsigned t = floor_log(v.k - 1, v.p);
        const auto kernel = SubspaceSpec::canonical(field, t).basis();
        const Polynomial poly = subspace_polynomial(f, kernel);
        const RsSpec spec(field, static_cast<std::uint32_t>(v.k));
        const ElemSet H = word_image(encode(spec, poly));
        const std::vector<Elem> basis = extract_basis(f, H);
        const std::string span_text = t == 1 ? "span(1)" : "span(1, ..., alpha^" + std::to_string(t - 1) + ")";
        v.certificate = "f = subspace polynomial of " + span_text + ", degree " + std::to_string(v.k - 1) +
                        "; |Im f| = " + std::to_string(H.size());
        std::optional<SepWitness> sep = witness_subgroup_split(f, basis, v.w1, v.w2);
        if (!sep) sep = witness_prop32(f, basis, v.w1, v.w2);
        if (!sep) {
            v.notes.push_back("no constructive additive cover under the floor reading");
            return;
        }
        finish_linear(poly, *sep);
        return;
    }

    if (rule == Rule::T4_1) {
        const unsigned vdim = *ev.v;
        if (vdim >= 1) {
            if (auto sep = field_separable_lemma31(2, vdim, v.w1, v.w2)) {
                v.witness = sep;
                v.witness_field_order = std::uint64_t{1} << vdim;
                v.certificate = "GF(2^" + std::to_string(vdim) + ") is separable; subspace subcode is non-trivial";
                v.notes.push_back("no codeword-level non-separation witness is built for this rule");
            } else {
                v.notes.push_back("field cover needs the rational bracket reading; no construction");
            }
        }
        if (v.m <= 12 && std::uint64_t{v.m} * v.k <= opt.exact_cols_cap) {
            const long K = exact_K(field, v.k, SubspaceSpec::canonical(field, vdim));
            v.ssrs->K = K;
            if (K < v.ssrs->L) v.notes.push_back("exact K below L bound");
        }
        return;
    }
}

}  // namespace detail

/// Classifies (q, w1, w2).  Throws std::invalid_argument on bad input.
inline Verdict classify(std::uint64_t q, unsigned w1, unsigned w2, const ClassifyOptions& opt = {}) {
    const auto pp = detail::prime_power(q);
    if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q < 4) throw std::invalid_argument("q must be >= 4");
    if (w1 < 2 || w2 < 1 || w1 < w2) throw std::invalid_argument("need w1 >= 2 and w1 >= w2 >= 1");

    Verdict v;
    v.q = q;
    v.w1 = w1;
    v.w2 = w2;
    v.p = static_cast<unsigned>(pp->p);
    v.m = pp->m;
    v.k = threshold_k(q, w1, w2);
    v.reading = opt.reading;

    if (std::uint64_t{w1} * w2 >= q) {
        v.status = Status::Trivial;
        v.floor_label = v.rational_label = "*";
        return v;
    }

    const auto ev = detail::evaluate_rules(q, v.p, v.m, w1, w2, v.k, opt.reading);
    const auto other = detail::evaluate_rules(
        q, v.p, v.m, w1, w2, v.k,
        opt.reading == BracketReading::Floor ? BracketReading::Rational : BracketReading::Floor);
    const auto& floor_ev = opt.reading == BracketReading::Floor ? ev : other;
    const auto& rational_ev = opt.reading == BracketReading::Floor ? other : ev;
    v.floor_label = detail::first_label(floor_ev);
    v.rational_label = detail::first_label(rational_ev);
    if (v.bracket_discrepancy()) {
        v.notes.push_back("bracket readings differ: floor=" + v.floor_label + " rational=" + v.rational_label);
    }

    v.checks = ev.checks;
    for (const auto& c : ev.checks) {
        if (!c.fires) continue;
        v.all_applicable_rules.push_back(c.rule);
        if (!v.attributed_rule) v.attributed_rule = c.rule;
    }
    v.ssrs = ev.dims;
    if (!v.attributed_rule) {
        v.status = Status::Pending;
        return v;
    }
    v.status = Status::Resolved;
    if (opt.materialize && q <= opt.witness_cap) detail::attach_witness(v, ev, opt);
    return v;
}

/// Non-separation at an arbitrary dimension k.  RS_k(q) is nested in RS_(k+1)(q),
/// so a verdict resolved at the threshold dimension covers every k above it;
/// below the threshold the distance bound makes the code separating.
inline bool resolved_at(std::uint64_t q, unsigned w1, unsigned w2, std::uint64_t k) {
    if (k < 1 || k + 1 > q) throw std::invalid_argument("k outside [1, q-1]");
    ClassifyOptions opt;
    opt.materialize = false;
    const Verdict v = classify(q, w1, w2, opt);
    if (v.status == Status::Trivial) return !distance_bound_equiv(q, k, w1, w2);
    return v.status == Status::Resolved && k >= v.k;
}

struct OracleOptions {
    std::uint64_t q_cap = 13;
    /// Materialized-code cross-check runs when q^k is at most this.
    std::uint64_t max_code_words = 1'000'000;
    Guard guard{};
    SearchBudget budget{};
    ClassifyOptions rules{};
};

/// Exhaustive realization for tiny fields: searches every non-constant f in P_k
/// (monic; constant term 0 for the additive test) for a separable codeword
/// image, then cross-checks against brute force on the materialized code.
inline Verdict classify_with_oracle(std::uint64_t q, unsigned w1, unsigned w2, const OracleOptions& opt = {}) {
    if (q > opt.q_cap) throw std::invalid_argument("q exceeds oracle cap " + std::to_string(opt.q_cap));
    Verdict v = classify(q, w1, w2, opt.rules);
    if (v.status == Status::Trivial) return v;
    const std::string rule_label = v.label();
    const std::optional<Rule> rule_attr = v.attributed_rule;

    const FieldPtr field = make_field(v.p, v.m);
    const Field& f = *field;
    const RsSpec spec(field, static_cast<std::uint32_t>(v.k));

    std::optional<std::pair<Polynomial, SepWitness>> found;
    std::set<std::pair<int, ElemSet>> seen;
    const std::uint32_t k = spec.k();
    for (std::uint32_t deg = 1; deg < k && !found; ++deg) {
        // Monic f of degree deg: enumerate the deg lower coefficients.
        std::vector<Elem> c(deg + 1, f.zero());
        c[deg] = f.one();
        while (!found) {
            const Polynomial poly(c);
            const ElemSet im = word_image(encode(spec, poly));
            if (im.size() >= 2) {
                for (Mode mode : {Mode::Additive, Mode::Multiplicative}) {
                    if (mode == Mode::Additive && c[0].value != 0) continue;
                    if (!seen.insert({static_cast<int>(mode), im}).second) continue;
                    auto r = search_separable(f, im, w1, w2, mode, opt.budget);
                    if (auto* w = std::get_if<SepWitness>(&r)) {
                        found.emplace(poly, *w);
                        break;
                    }
                }
            }
            std::size_t i = 0;
            while (i < deg && c[i].value + 1 == f.q()) c[i++] = f.zero();
            if (i == deg) break;
            c[i].value += 1;
        }
    }

    std::optional<ExplicitCode> code;
    std::uint64_t words = 0;
    try {
        words = detail::checked_pow(q, k, opt.max_code_words);
        code.emplace(field, materialize_code(spec, opt.max_code_words));
    } catch (const std::exception&) {
        code.reset();
    }
    std::optional<SeparatingResult> direct;
    if (code) direct = is_separating(*code, w1, w2, opt.guard);

    // A rule-resolved cell keeps its attribution; the oracle adds BruteForce and
    // fills in whatever witness the rule path did not produce.
    auto resolve = [&](NonSepWitness nw, bool verified) {
        v.status = Status::Resolved;
        v.all_applicable_rules.push_back(Rule::BruteForce);
        if (!v.attributed_rule) v.attributed_rule = Rule::BruteForce;
        if (!v.nonsep || !v.nonsep_verified) {
            v.nonsep = std::move(nw);
            v.nonsep_verified = verified;
        }
    };
    if (found) {
        const Word cw = encode(spec, found->first);
        NonSepWitness nw = witness_from_separable_image(f, cw, found->second);
        const bool ok = code ? check_nonsep(nw, w1, w2, *code) : check_nonsep(nw, w1, w2);
        if (!v.witness) {
            v.witness = found->second;
            v.witness_field_order = q;
        }
        v.notes.push_back("separable image: f=" + detail::describe_poly(found->first) +
                          " (coefficients, lowest degree first)");
        resolve(std::move(nw), ok);
        if (direct && std::holds_alternative<Holds>(*direct))
            v.notes.push_back("CONTRADICTION: direct check says the code is separating");
    } else if (direct && std::holds_alternative<SeparatingFails>(*direct)) {
        NonSepWitness nw = std::get<SeparatingFails>(*direct).witness;
        const bool ok = check_nonsep(nw, w1, w2, *code);
        resolve(std::move(nw), ok);
        v.notes.push_back("no separable codeword image; direct search found non-separation");
    } else {
        if (direct && std::holds_alternative<Holds>(*direct))
            v.notes.push_back("RS_k(q) is (w1,w2)-separating at the threshold dimension");
        else
            v.notes.push_back("no separable codeword image; direct check inconclusive");
        if (rule_attr && direct && std::holds_alternative<Holds>(*direct))
            v.notes.push_back("CONTRADICTION: rule resolved but the code is separating");
        else if (rule_attr)
            v.notes.push_back("rule verdict not independently confirmed");
    }
    if (direct) {
        const char* name = std::holds_alternative<Holds>(*direct)           ? "holds"
                           : std::holds_alternative<SeparatingFails>(*direct) ? "fails"
                                                                              : "guard exceeded";
        v.notes.push_back(std::string("direct separating check on ") + std::to_string(words) + " codewords: " + name);
    } else {
        v.notes.push_back("direct separating check skipped (code too large)");
    }
    v.notes.push_back("rule chain: " + rule_label);
    return v;
}

struct WRow {
    std::string label;  // "14-15"
    std::vector<unsigned> ws;
};

/// Parses "2,3,14-15" into rows.
inline std::vector<WRow> parse_w_rows(const std::string& spec) {
    std::vector<WRow> rows;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        WRow row{tok, {}};
        const auto dash = tok.find('-');
        try {
            if (dash == std::string::npos) {
                row.ws.push_back(static_cast<unsigned>(std::stoul(tok)));
            } else {
                const unsigned lo = static_cast<unsigned>(std::stoul(tok.substr(0, dash)));
                const unsigned hi = static_cast<unsigned>(std::stoul(tok.substr(dash + 1)));
                if (lo > hi) throw std::invalid_argument("empty range " + tok);
                for (unsigned w = lo; w <= hi; ++w) row.ws.push_back(w);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad w token '" + tok + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<std::uint64_t> parse_q_list(const std::string& spec) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoull(tok));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad q token '" + tok + "'");
        }
    }
    return out;
}

struct Table {
    std::vector<std::uint64_t> qs;
    std::vector<WRow> rows;
    /// cells[row][w index in row][q index]
    std::vector<std::vector<std::vector<Verdict>>> cells;
};

/// One verdict per (w, q) with w1 = w2 = w; cells are computed in parallel.
inline Table build_table(const std::vector<std::uint64_t>& qs, const std::vector<WRow>& rows,
                         const ClassifyOptions& opt = {}, unsigned workers = 1) {
    Table t{qs, rows, {}};
    struct Slot {
        std::size_t r, i, j;
    };
    std::vector<Slot> slots;
    t.cells.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        t.cells[r].assign(rows[r].ws.size(), std::vector<Verdict>(qs.size()));
        for (std::size_t i = 0; i < rows[r].ws.size(); ++i)
            for (std::size_t j = 0; j < qs.size(); ++j) slots.push_back({r, i, j});
    }
    detail::parallel_for(slots.size(), workers, [&](std::size_t n) {
        const Slot& s = slots[n];
        const unsigned w = rows[s.r].ws[s.i];
        t.cells[s.r][s.i][s.j] = classify(qs[s.j], w, w, opt);
    });
    return t;
}

}  // namespace rsc
