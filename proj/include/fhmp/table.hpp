#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhmp/config.hpp"
#include "fhmp/errors.hpp"

namespace fhmp {

/// Columnar sweep output. Absent cells are momenta that could not be
/// produced (R not real / non-finite); they serialize as empty CSV fields
/// and JSON nulls, never as sentinel numbers.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<double>>> rows;
};

/// 17 significant digits: numbers survive a parse round trip bit-exactly.
/// std::to_chars is locale-independent, so the decimal point is always '.'.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ',';
        out += t.header[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (row[i]) out += format_double(*row[i]);
        }
        out += '\n';
    }
    return out;
}

/// Mirror of the CSV: an array of row objects keyed by the column names.
inline std::string to_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i])
                obj[t.header[i]] = *row[i];
            else
                obj[t.header[i]] = nullptr;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

inline std::string render(const Table& t, OutputFormat fmt) {
    return fmt == OutputFormat::csv ? to_csv(t) : to_json(t);
}

inline void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("out", "cannot open '" + path + "'");
    out << text;
}

} // namespace fhmp
