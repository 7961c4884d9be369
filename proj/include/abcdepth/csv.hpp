#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcdepth/data.hpp"

namespace abcdepth {

/// Raised for malformed input files; the message carries row/column position.
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_cell(const std::string& cell, std::size_t line, std::size_t col) {
    std::size_t b = cell.find_first_not_of(" \t");
    if (b == std::string::npos)
        throw CsvError("non-numeric cell at line " + std::to_string(line) + ", column " +
                       std::to_string(col));
    std::size_t e = cell.find_last_not_of(" \t");
    double out = 0.0;
    const char* first = cell.data() + b;
    const char* last = cell.data() + e + 1;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw CsvError("non-numeric cell at line " + std::to_string(line) + ", column " +
                       std::to_string(col));
    return out;
}

}  // namespace detail

/// Reads a comma-delimited file of reals into a DataMatrix (all rows original).
/// Row order is preserved; an optional single header line is skipped.
inline DataMatrix load_csv(const std::string& path, bool has_header = false) {
    std::ifstream in(path);
    if (!in) throw CsvError("missing file: " + path);

    std::vector<double> values;
    std::size_t d = 0;
    std::size_t line_no = 0;
    std::size_t data_rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (has_header && line_no == 1) continue;
        if (line.empty()) continue;

        std::size_t col = 0;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            ++col;
            values.push_back(detail::parse_cell(cell, line_no, col));
        }
        ++data_rows;
        if (d == 0) {
            d = col;
        } else if (col != d) {
            throw CsvError("ragged row at line " + std::to_string(line_no));
        }
    }
    if (data_rows == 0) throw CsvError("zero data rows in " + path);
    return DataMatrix(std::move(values), d);
}

/// Writes rows in load_csv-compatible form (shortest round-trip decimals).
inline void save_csv(const std::string& path, const DataMatrix& X) {
    std::ofstream out(path);
    if (!out) throw CsvError("cannot open for writing: " + path);
    char buf[64];
    for (std::size_t i = 0; i < X.n_total(); ++i) {
        auto r = X.row(i);
        for (std::size_t k = 0; k < r.size(); ++k) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), r[k]);
            (void)ec;
            if (k) out << ',';
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
}

}  // namespace abcdepth
