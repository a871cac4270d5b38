#pragma once

// Transcription of the printed reference table: one entry per (row, q) cell.

#include <cstdint>
#include <string>
#include <vector>

#include "rsc/classifier.hpp"

namespace expected {

inline const std::vector<std::uint64_t> kQs{16, 32, 64, 81, 125, 128, 243, 256, 512, 1024, 2048, 2187};

struct Row {
    const char* w;
    std::vector<const char*> labels;
};

inline const std::vector<Row>& rows() {
    static const std::vector<Row> r{
        {"2", {"[mfs]", "[mfs]", "[mfs]", "[fcsd]", "[fcsd]", "[mfs]", "-", "[mfs]", "[mfs]", "[mfs]", "-", "[mfs]"}},
        {"3", {"-", "-", "[fcsd]", "[mfs]", "-", "-", "[mfs]", "-", "-", "-", "-", "[mfs]"}},
        {"4", {"[fcsd]", "[mfs]", "[mfs]", "[fcsd]", "-", "[mfs]", "-", "[mfs]", "[mfs]", "[mfs]", "[mfs]", "-"}},
        {"5", {"*", "3.1", "[fcsd]", "[fcsd]", "[mfs]", "-", "-", "-", "-", "-", "-", "-"}},
        {"7", {"*", "*", "3.1", "3.1", "-", "4.1", "-", "-", "-", "-", "-", "-"}},
        {"9", {"*", "*", "*", "[fcsd]", "[fcsd]", "3.1", "[mfs]", "3.1", "[fcsd]", "-", "-", "[mfs]"}},
        {"10", {"*", "*", "*", "[fcsd]", "[fcsd]", "3.1", "3.1", "[fcsd]", "-", "[fcsd]", "-", "-"}},
        {"12", {"*", "*", "*", "*", "*", "*", "[fcsd]", "3.1", "3.1", "3.1", "4.1", "-"}},
        {"13", {"*", "*", "*", "*", "*", "*", "[fcsd]", "3.1", "3.1", "4.1", "-", "-"}},
        {"14-15", {"*", "*", "*", "*", "*", "*", "[fcsd]", "3.1", "4.1", "-", "-", "-"}},
        {"17", {"*", "*", "*", "*", "*", "*", "*", "*", "3.1", "3.1", "3.1", "-"}},
        {"18", {"*", "*", "*", "*", "*", "*", "*", "*", "3.1", "3.1", "4.1", "-"}},
        {"19-22", {"*", "*", "*", "*", "*", "*", "*", "*", "3.1", "[fcsd]", "-", "-"}},
        {"24", {"*", "*", "*", "*", "*", "*", "*", "*", "*", "3.1", "3.1", "-"}},
        {"28-31", {"*", "*", "*", "*", "*", "*", "*", "*", "*", "3.1", "4.1", "3.1"}},
        {"34-40", {"*", "*", "*", "*", "*", "*", "*", "*", "*", "*", "3.1", "[fcsd]"}},
    };
    return r;
}

inline std::string w_list() {
    std::string s;
    for (const auto& r : rows()) s += (s.empty() ? "" : ",") + std::string(r.w);
    return s;
}

struct Cell {
    std::string row;
    std::uint64_t q;
    std::vector<unsigned> ws;
    std::string label;
};

inline std::vector<Cell> cells() {
    std::vector<Cell> out;
    const auto parsed = rsc::parse_w_rows(w_list());
    for (std::size_t r = 0; r < rows().size(); ++r)
        for (std::size_t j = 0; j < kQs.size(); ++j)
            out.push_back({rows()[r].w, kQs[j], parsed[r].ws, rows()[r].labels[j]});
    return out;
}

}  // namespace expected
