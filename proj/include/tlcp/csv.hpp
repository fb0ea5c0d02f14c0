#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tlcp/error.hpp"

namespace tlcp::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column position by name; throws ParseError naming the column when absent.
  int column(const std::string& name) const;
};

Table read_file(const std::filesystem::path& path);

// Writes UTF-8, comma-separated, header first. Cells are quoted only when
// they contain a comma, quote, or newline.
void write_file(const std::filesystem::path& path,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

// Shortest exact round-trip representation of a double.
std::string format_double(double v);

// Empty cell means "absent". Parse errors carry 1-based line and column name.
std::optional<double> parse_optional_double(const std::string& cell, int line,
                                            const std::string& column);
double parse_double(const std::string& cell, int line, const std::string& column);
int parse_int(const std::string& cell, int line, const std::string& column);

}  // namespace tlcp::csv
