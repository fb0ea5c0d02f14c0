#include "tlcp/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tlcp::csv {

namespace {

std::vector<std::string> split_line(const std::string& line, int line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      if (!cell.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": quote inside unquoted cell");
      }
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  if (quoted) {
    throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::string escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

int Table::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  throw ParseError("missing required column \"" + name + "\"");
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Table table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      table.header = split_line(line, line_no);
      continue;
    }
    if (line.empty()) continue;
    auto cells = split_line(line, line_no);
    if (cells.size() != table.header.size()) {
      throw ParseError(path.string() + " line " + std::to_string(line_no) +
                       ": expected " + std::to_string(table.header.size()) +
                       " cells, got " + std::to_string(cells.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty()) throw ParseError(path.string() + ": empty file");
  return table;
}

void write_file(const std::filesystem::path& path,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  std::string buf;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) buf.push_back(',');
    buf += escape(header[i]);
  }
  buf.push_back('\n');
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) buf.push_back(',');
      buf += escape(row[i]);
    }
    buf.push_back('\n');
  }
  out << buf;
  if (!out) throw ParseError("failed writing " + path.string());
}

std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw NumericError("format_double failed");
  return std::string(buf, end);
}

std::optional<double> parse_optional_double(const std::string& cell, int line,
                                            const std::string& column) {
  if (cell.empty()) return std::nullopt;
  return parse_double(cell, line, column);
}

double parse_double(const std::string& cell, int line, const std::string& column) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + " column \"" + column +
                     "\": not a number: \"" + cell + "\"");
  }
  return value;
}

int parse_int(const std::string& cell, int line, const std::string& column) {
  int value = 0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + " column \"" + column +
                     "\": not an integer: \"" + cell + "\"");
  }
  return value;
}

}  // namespace tlcp::csv
