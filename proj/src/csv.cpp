#include "satopt/csv.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace satopt::csv {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

void write_csv(std::ostream& out, const SweepResult& result) {
    if (result.columns.empty()) {
        throw std::invalid_argument("sweep result has no columns");
    }
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        if (i > 0) out << ',';
        out << result.columns[i];
    }
    out << '\n';
    double prev_x = -std::numeric_limits<double>::infinity();
    for (const auto& row : result.rows) {
        if (row.size() != result.columns.size()) {
            throw std::invalid_argument("sweep row width mismatch");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("sweep rows must be finite");
            }
        }
        if (!(row.front() > prev_x)) {
            throw std::invalid_argument("sweep rows must be strictly ordered");
        }
        prev_x = row.front();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_value(row[i]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const SweepResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    write_csv(out, result);
}

} // namespace satopt::csv
