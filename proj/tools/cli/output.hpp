#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vgnet::cli {

/// 17 significant digits, '.' decimal separator.
std::string format_number(double x);

/// One header line "# <columns>[; <meta>]" followed by comma-separated rows.
void write_csv(std::ostream& os, const std::string& columns, const std::string& meta,
               const std::vector<std::vector<double>>& rows);

/// Writes `text` to `path`; throws ConfigError if the file cannot be opened.
void write_file(const std::string& path, const std::string& text);

}  // namespace vgnet::cli
