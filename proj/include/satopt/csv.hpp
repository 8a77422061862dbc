#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satopt::csv {

/// Ordered sweep output. First column is the abscissa; rows must be strictly
/// increasing in it and every value finite.
struct SweepResult {
    std::string abscissa_name;
    std::string ordinate_name;
    std::vector<std::string> columns; // includes the abscissa as column 0
    std::vector<std::vector<double>> rows;
    std::string metadata; // resolved-config echo for reproducibility
};

/// Scientific notation, 9 significant digits, '.' decimal separator.
std::string format_value(double v);

/// Comma-separated, header row, LF line endings. Validates the row ordering
/// and finiteness invariants.
void write_csv(std::ostream& out, const SweepResult& result);
void write_csv_file(const std::string& path, const SweepResult& result);

} // namespace satopt::csv
