#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace convlab {

/// Shortest round-trippable decimal form of v (17 significant digits,
/// '.' decimal separator).
std::string format_g17(double v);

/// One CSV record, LF-terminated.
void write_csv_line(std::ostream& os, std::span<const std::string> cells);
void write_csv_row(std::ostream& os, std::span<const double> values);

/// Reads back a numeric CSV (header skipped when present).
std::vector<std::vector<double>> read_csv_numeric(const std::string& path,
                                                  bool skip_header);

} // namespace convlab
