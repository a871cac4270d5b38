#pragma once

// Markdown / CSV / JSON output for verdicts, tables, witnesses and subcode dimensions.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsc/classifier.hpp"

namespace rsc {

using nlohmann::json;

inline std::vector<std::uint32_t> word_ints(const Word& w) {
    std::vector<std::uint32_t> out;
    out.reserve(w.size());
    for (Elem e : w) out.push_back(e.value);
    return out;
}

inline Word ints_word(const std::vector<std::uint32_t>& v) {
    Word out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(Elem{x});
    return out;
}

inline ElemSet ints_set(const std::vector<std::uint32_t>& v) { return make_set(ints_word(v)); }

inline void to_json(json& j, const SepWitness& w) {
    j = json{{"mode", to_string(w.mode)}, {"E", to_ints(w.E)}, {"F", to_ints(w.F)}, {"w1", w.w1}, {"w2", w.w2}};
}

inline void from_json(const json& j, SepWitness& w) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "additive" && mode != "multiplicative") throw std::invalid_argument("unknown mode " + mode);
    w.mode = mode == "additive" ? Mode::Additive : Mode::Multiplicative;
    w.E = ints_set(j.at("E").get<std::vector<std::uint32_t>>());
    w.F = ints_set(j.at("F").get<std::vector<std::uint32_t>>());
    w.w1 = j.at("w1").get<unsigned>();
    w.w2 = j.at("w2").get<unsigned>();
}

inline json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(word_ints(w));
    return a;
}

inline std::vector<Word> json_words(const json& j) {
    std::vector<Word> out;
    for (const auto& w : j) out.push_back(ints_word(w.get<std::vector<std::uint32_t>>()));
    return out;
}

inline void to_json(json& j, const NonSepWitness& w) {
    j = json{{"U1", words_json(w.U1)}, {"U2", words_json(w.U2)}, {"x", word_ints(w.x)}};
}

inline void from_json(const json& j, NonSepWitness& w) {
    w.U1 = json_words(j.at("U1"));
    w.U2 = json_words(j.at("U2"));
    w.x = ints_word(j.at("x").get<std::vector<std::uint32_t>>());
}

inline json ssrs_json(const SsrsDims& d, bool rows) {
    json j{{"m", d.m}, {"k", d.k}, {"v", d.v}, {"L", d.L}, {"K", d.K ? json(*d.K) : json(nullptr)}};
    if (rows) {
        json r = json::array();
        for (const auto& row : d.rows)
            r.push_back({{"j", row.j}, {"d", row.d}, {"e", row.e}, {"a", row.a}, {"term", row.term}});
        j["rows"] = r;
    }
    return j;
}

inline json verdict_json(const Verdict& v) {
    json checks = json::array();
    for (const auto& c : v.checks) checks.push_back({{"rule", to_string(c.rule)}, {"fires", c.fires}, {"detail", c.detail}});
    json all = json::array();
    for (Rule r : v.all_applicable_rules) all.push_back(to_string(r));
    json j{{"q", v.q},
           {"w1", v.w1},
           {"w2", v.w2},
           {"k", v.k},
           {"p", v.p},
           {"m", v.m},
           {"status", to_string(v.status)},
           {"rule", v.attributed_rule ? json(to_string(*v.attributed_rule)) : json(nullptr)},
           {"label", v.label()},
           {"all_rules", all},
           {"reading", to_string(v.reading)},
           {"floor_label", v.floor_label},
           {"rational_label", v.rational_label},
           {"checks", checks},
           {"certificate", v.certificate},
           {"nonsep_verified", v.nonsep_verified},
           {"notes", v.notes}};
    j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    if (v.witness) j["witness_field_order"] = v.witness_field_order;
    j["nonsep"] = v.nonsep ? json(*v.nonsep) : json(nullptr);
    j["ssrs"] = v.ssrs ? ssrs_json(*v.ssrs, false) : json(nullptr);
    return j;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string verdict_csv_row(const Verdict& v) {
    std::vector<std::string> all;
    for (Rule r : v.all_applicable_rules) all.push_back(to_string(r));
    std::ostringstream os;
    os << v.q << ',' << v.w1 << ',' << v.w2 << ',' << v.k << ',' << to_string(v.status) << ','
       << (v.attributed_rule ? to_string(*v.attributed_rule) : "") << ',' << csv_field(join(all, ";")) << ','
       << csv_field(join(v.notes, "; "));
    return os.str();
}

inline const char* kCsvHeader = "q,w1,w2,k,status,rule,all_rules,note";

inline std::string verdict_markdown(const Verdict& v) {
    std::ostringstream os;
    os << "## q=" << v.q << " w1=" << v.w1 << " w2=" << v.w2 << "\n\n";
    os << "- k: " << v.k << "\n- status: " << to_string(v.status) << "\n- label: " << v.label() << "\n";
    if (v.attributed_rule) os << "- rule: " << to_string(*v.attributed_rule) << "\n";
    for (const auto& c : v.checks) os << "- " << to_string(c.rule) << (c.fires ? " fires" : " no") << ": " << c.detail << "\n";
    if (v.witness) {
        os << "- witness (" << to_string(v.witness->mode) << ", GF(" << v.witness_field_order
           << ")): E=" << json(to_ints(v.witness->E)).dump() << " F=" << json(to_ints(v.witness->F)).dump() << "\n";
    }
    if (!v.certificate.empty()) os << "- certificate: " << v.certificate << "\n";
    if (v.nonsep) os << "- non-separation witness verified: " << (v.nonsep_verified ? "yes" : "no") << "\n";
    for (const auto& n : v.notes) os << "- note: " << n << "\n";
    return os.str();
}

/// One label per cell; range rows show "a/b" when members disagree, bracket
/// discrepancies get a dagger and a footnote with both readings.
inline std::string table_markdown(const Table& t) {
    std::ostringstream os;
    os << "| w |";
    for (auto q : t.qs) os << ' ' << q << " |";
    os << "\n|---|";
    for (std::size_t j = 0; j < t.qs.size(); ++j) os << "---|";
    os << "\n";
    std::vector<std::string> foot;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "| " << t.rows[r].label << " |";
        for (std::size_t j = 0; j < t.qs.size(); ++j) {
            std::vector<std::string> labels;
            bool flagged = false;
            for (std::size_t i = 0; i < t.rows[r].ws.size(); ++i) {
                const Verdict& v = t.cells[r][i][j];
                if (std::find(labels.begin(), labels.end(), v.label()) == labels.end()) labels.push_back(v.label());
                if (v.bracket_discrepancy()) {
                    flagged = true;
                    foot.push_back("w=" + std::to_string(v.w1) + ", q=" + std::to_string(v.q) +
                                   ": floor reading " + v.floor_label + ", rational reading " + v.rational_label);
                }
            }
            os << ' ' << join(labels, "/") << (flagged ? "†" : "") << " |";
        }
        os << "\n";
    }
    if (!foot.empty()) {
        os << "\n";
        for (const auto& f : foot) os << "† " << f << "\n";
    }
    return os.str();
}

inline std::string table_csv(const Table& t) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t i = 0; i < t.rows[r].ws.size(); ++i)
            for (std::size_t j = 0; j < t.qs.size(); ++j) os << verdict_csv_row(t.cells[r][i][j]) << "\n";
    return os.str();
}

inline json table_json(const Table& t) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json cells = json::array();
        for (std::size_t i = 0; i < t.rows[r].ws.size(); ++i)
            for (std::size_t j = 0; j < t.qs.size(); ++j) cells.push_back(verdict_json(t.cells[r][i][j]));
        rows.push_back({{"w", t.rows[r].label}, {"cells", cells}});
    }
    return json{{"q", t.qs}, {"rows", rows}};
}

}  // namespace rsc
