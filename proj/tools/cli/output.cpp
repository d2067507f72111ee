#include "cli/output.hpp"

#include <cstdio>
#include <fstream>

#include "cli/config.hpp"

namespace vgnet::cli {

std::string format_number(double x) {
  // snprintf follows LC_NUMERIC, which the tool never changes from "C".
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const std::string& columns, const std::string& meta,
               const std::vector<std::vector<double>>& rows) {
  os << "# " << columns;
  if (!meta.empty()) os << "; " << meta;
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_number(row[j]);
    os << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ConfigError("write to '" + path + "' failed");
}

}  // namespace vgnet::cli
