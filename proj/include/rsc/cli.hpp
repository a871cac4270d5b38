#pragma once

// Command-line front end.  run() holds every command so tests can drive it
// without spawning a process.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rsc/classifier.hpp"
#include "rsc/render.hpp"

namespace rsc::cli {

inline constexpr const char* kDefaultQs = "16,32,64,81,125,128,243,256,512,1024,2048,2187";
inline constexpr const char* kDefaultWs = "2,3,4,5,7,9,10,12,13,14-15,17,18,19-22,24,28-31,34-40";

enum Exit : int { kOk = 0, kInputError = 1, kPending = 2 };

inline BracketReading parse_reading(const std::string& s) {
    return s == "floor" ? BracketReading::Floor : BracketReading::Rational;
}

inline std::vector<std::uint32_t> parse_ints(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (auto q : parse_q_list(s)) {
        if (q > UINT32_MAX) throw std::invalid_argument("element out of range");
        out.push_back(static_cast<std::uint32_t>(q));
    }
    return out;
}

inline Word make_word(const Field& f, const std::vector<std::uint32_t>& v) {
    Word w;
    for (auto x : v) {
        if (x >= f.q()) throw std::invalid_argument("element " + std::to_string(x) + " outside GF(" + std::to_string(f.q()) + ")");
        w.push_back(Elem{x});
    }
    return w;
}

inline int cmd_classify(std::uint64_t q, unsigned w1, unsigned w2, bool oracle, const std::string& format,
                        BracketReading reading, std::ostream& out) {
    ClassifyOptions opt;
    opt.reading = reading;
    Verdict v;
    if (oracle) {
        OracleOptions o;
        o.rules = opt;
        v = classify_with_oracle(q, w1, w2, o);
    } else {
        v = classify(q, w1, w2, opt);
    }
    if (format == "csv")
        out << kCsvHeader << "\n" << verdict_csv_row(v) << "\n";
    else if (format == "markdown")
        out << verdict_markdown(v);
    else
        out << verdict_json(v).dump(2) << "\n";
    return v.status == Status::Pending ? kPending : kOk;
}

inline int cmd_table(const std::string& qs, const std::string& ws, const std::string& format, BracketReading reading,
                     unsigned workers, std::ostream& out) {
    const auto qlist = parse_q_list(qs);
    const auto rows = parse_w_rows(ws);
    ClassifyOptions opt;
    opt.reading = reading;
    opt.materialize = false;
    const Table t = build_table(qlist, rows, opt, workers);
    if (format == "csv")
        out << table_csv(t);
    else if (format == "json")
        out << table_json(t).dump(2) << "\n";
    else
        out << table_markdown(t);
    return kOk;
}

inline ExplicitCode rs_code_of(std::uint64_t q, std::uint64_t k, std::uint64_t max_words) {
    const FieldPtr field = make_field_of_order(q);
    if (k < 1 || k + 1 > q) throw std::invalid_argument("k outside [1, q-1]");
    const RsSpec spec(field, static_cast<std::uint32_t>(k));
    return ExplicitCode(field, materialize_code(spec, max_words));
}

inline int cmd_verify(const std::string& property, std::uint64_t q, std::uint64_t k, unsigned w1, unsigned w2,
                      std::uint64_t guard, unsigned workers, std::ostream& out) {
    const ExplicitCode code = rs_code_of(q, k, 1'000'000);
    Guard g{guard, workers};
    json j{{"property", property}, {"q", q}, {"k", k}, {"n", code.length()}, {"size", code.size()}};
    std::string result;
    if (property == "separating") {
        j["w1"] = w1;
        j["w2"] = w2;
        const auto r = is_separating(code, w1, w2, g);
        if (std::holds_alternative<Holds>(r)) {
            result = "holds";
        } else if (auto* f = std::get_if<SeparatingFails>(&r)) {
            result = "fails";
            j["witness"] = f->witness;
            j["witness_verified"] = check_nonsep(f->witness, w1, w2, code);
        } else {
            result = "guard_exceeded";
            j["estimate"] = std::get<GuardExceeded>(r).estimate;
        }
    } else if (property == "ipp") {
        j["w"] = w1;
        const auto r = is_ipp(code, w1, g);
        if (std::holds_alternative<Holds>(r)) {
            result = "holds";
        } else if (auto* f = std::get_if<IppFails>(&r)) {
            result = "fails";
            json cs = json::array();
            for (const auto& c : f->coalitions) cs.push_back(words_json(c));
            j["x"] = word_ints(f->x);
            j["coalitions"] = cs;
        } else {
            result = "guard_exceeded";
            j["estimate"] = std::get<GuardExceeded>(r).estimate;
        }
    } else if (property == "ta") {
        j["w"] = w1;
        const auto r = is_ta(code, w1, g);
        if (std::holds_alternative<Holds>(r)) {
            result = "holds";
        } else if (auto* f = std::get_if<TaFails>(&r)) {
            result = "fails";
            j["x"] = word_ints(f->x);
            j["coalition"] = words_json(f->coalition);
            j["outsider"] = word_ints(f->outsider);
        } else {
            result = "guard_exceeded";
            j["estimate"] = std::get<GuardExceeded>(r).estimate;
        }
    } else {
        throw std::invalid_argument("unknown property " + property);
    }
    j["result"] = result;
    out << j.dump(2) << "\n";
    return result == "guard_exceeded" ? kPending : kOk;
}

inline int cmd_ssrs(std::uint64_t q, std::uint64_t k, unsigned v, bool exact, bool nonzero_only,
                    const std::string& format, std::ostream& out) {
    const auto pp = detail::prime_power(q);
    if (!pp || pp->p != 2) throw std::invalid_argument("ssrs needs q a power of 2");
    SsrsDims d = lower_bound_L(pp->m, k, v);
    if (exact) {
        const FieldPtr field = make_field(2, pp->m);
        d.K = exact_K(field, k, SubspaceSpec::canonical(field, v));
    }
    if (format == "json") {
        json j = ssrs_json(d, true);
        j["nontrivial"] = d.L > static_cast<long>(v) || (d.K && *d.K > static_cast<long>(v));
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "j,d_j,e_j,a_j,term\n";
    for (const auto& r : d.rows) {
        if (nonzero_only && r.term == 0) continue;
        out << r.j << ',' << r.d << ',' << r.e << ',' << r.a << ',' << r.term << "\n";
    }
    out << "# m=" << d.m << " k=" << d.k << " v=" << d.v << "\n";
    out << "# L=" << d.L << "\n";
    if (d.K) out << "# K=" << *d.K << "\n";
    out << "# nontrivial=" << ((d.L > static_cast<long>(v) || (d.K && *d.K > static_cast<long>(v))) ? "yes" : "no")
        << "\n";
    return kOk;
}

inline int cmd_separable(std::uint64_t q, const std::string& set, unsigned w1, unsigned w2, const std::string& mode,
                         std::uint64_t budget, std::ostream& out) {
    const FieldPtr field = make_field_of_order(q);
    const ElemSet U = make_set(make_word(*field, parse_ints(set)));
    if (U.empty()) throw std::invalid_argument("--set is empty");
    if (mode != "additive" && mode != "multiplicative") throw std::invalid_argument("unknown mode " + mode);
    SearchBudget b;
    b.max_candidates = budget;
    const auto r = search_separable(*field, U, w1, w2, mode == "additive" ? Mode::Additive : Mode::Multiplicative, b);
    json j{{"q", q}, {"U", to_ints(U)}, {"w1", w1}, {"w2", w2}, {"mode", mode}};
    int code = kOk;
    if (auto* w = std::get_if<SepWitness>(&r)) {
        j["result"] = "separable";
        j["witness"] = *w;
        j["witness_verified"] = check_witness(*field, U, *w);
    } else if (auto* n = std::get_if<NotSeparable>(&r)) {
        j["result"] = "not_separable";
        j["reason"] = n->reason;
        code = kPending;
    } else {
        const auto& be = std::get<BudgetExceeded>(r);
        j["result"] = "budget_exceeded";
        j["reason"] = be.reason;
        j["candidates"] = be.candidates;
        code = kPending;
    }
    out << j.dump(2) << "\n";
    return code;
}

/// Markdown listing of the registry polynomials for every prime power up to max_q.
inline int cmd_fields(std::uint64_t max_q, std::ostream& out) {
    out << "| q | p | m | modulus (c0..cm) | alpha |\n|---|---|---|---|---|\n";
    for (std::uint64_t q = 2; q <= max_q; ++q) {
        const auto pp = detail::prime_power(q);
        if (!pp) continue;
        const FieldPtr f = make_field(static_cast<unsigned>(pp->p), pp->m);
        std::vector<std::string> cs;
        for (auto c : f->modulus()) cs.push_back(std::to_string(c));
        out << "| " << q << " | " << pp->p << " | " << pp->m << " | " << join(cs, " ") << " | " << f->alpha().value
            << " |\n";
    }
    return kOk;
}

/// Parses argv-style arguments (without the program name) and runs one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reed-Solomon separation and traceability toolkit", "rsc"};
    app.require_subcommand(1);
    std::string bracket = "rational";
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

    std::uint64_t q = 0;
    unsigned w1 = 0, w2 = 0;
    bool oracle = false;
    std::string format;
    auto* classify_cmd = app.add_subcommand("classify", "classify one (q, w1, w2)");
    classify_cmd->add_option("--q", q)->required();
    classify_cmd->add_option("--w1", w1)->required();
    classify_cmd->add_option("--w2", w2, "defaults to w1");
    classify_cmd->add_flag("--oracle", oracle, "exhaustive polynomial search (q <= 13)");
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    classify_cmd->add_option("--bracket", bracket)->check(CLI::IsMember({"floor", "rational"}));

    std::string qs = kDefaultQs, ws = kDefaultWs;
    unsigned workers = hw;
    auto* table_cmd = app.add_subcommand("table", "classify a grid with w1 = w2 = w");
    table_cmd->add_option("--q-list", qs);
    table_cmd->add_option("--w-list", ws, "comma separated, ranges as a-b");
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    table_cmd->add_option("--bracket", bracket)->check(CLI::IsMember({"floor", "rational"}));
    table_cmd->add_option("--workers", workers);

    std::string property = "separating";
    std::uint64_t k = 0, guard = Guard{}.max_work;
    auto* verify_cmd = app.add_subcommand("verify", "brute-force a property of RS_k(q)");
    verify_cmd->add_option("--property", property)->check(CLI::IsMember({"separating", "ipp", "ta"}));
    verify_cmd->add_option("--q", q)->required();
    verify_cmd->add_option("--k", k)->required();
    verify_cmd->add_option("--w1", w1)->required();
    verify_cmd->add_option("--w2", w2, "defaults to w1");
    verify_cmd->add_option("--guard", guard, "work limit");
    verify_cmd->add_option("--workers", workers);

    unsigned v = 0;
    bool exact = false, nonzero = false;
    auto* ssrs_cmd = app.add_subcommand("ssrs", "subspace subcode dimensions of RS_k(2^m)");
    ssrs_cmd->add_option("--q", q)->required();
    ssrs_cmd->add_option("--k", k)->required();
    ssrs_cmd->add_option("--v", v)->required();
    ssrs_cmd->add_flag("--exact", exact, "also compute K by rank");
    ssrs_cmd->add_flag("--nonzero", nonzero, "only rows with a positive term");
    ssrs_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::string set, mode = "additive";
    std::uint64_t budget = SearchBudget{}.max_candidates;
    auto* sep_cmd = app.add_subcommand("separable", "search for a separable cover of a set");
    sep_cmd->add_option("--q", q)->required();
    sep_cmd->add_option("--set", set)->required();
    sep_cmd->add_option("--w1", w1)->required();
    sep_cmd->add_option("--w2", w2, "defaults to w1");
    sep_cmd->add_option("--mode", mode)->check(CLI::IsMember({"additive", "multiplicative"}));
    sep_cmd->add_option("--budget", budget);

    std::uint64_t max_q = 2048;
    auto* fields_cmd = app.add_subcommand("fields", "list registry polynomials");
    fields_cmd->add_option("--max", max_q);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int rc = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (w2 == 0) w2 = w1;
        const BracketReading reading = parse_reading(bracket);
        if (*classify_cmd) return cmd_classify(q, w1, w2, oracle, format.empty() ? "json" : format, reading, out);
        if (*table_cmd) return cmd_table(qs, ws, format.empty() ? "markdown" : format, reading, workers, out);
        if (*verify_cmd) return cmd_verify(property, q, k, w1, w2, guard, workers, out);
        if (*ssrs_cmd) return cmd_ssrs(q, k, v, exact, nonzero, format.empty() ? "csv" : format, out);
        if (*sep_cmd) return cmd_separable(q, set, w1, w2, mode, budget, out);
        if (*fields_cmd) return cmd_fields(max_q, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace rsc::cli
