#include "regen/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace regen {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  CsvTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (table.header.empty()) {
      table.header = cells;
      table.columns.assign(cells.size(), {});
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw std::runtime_error(path.string() + ":" +
                               std::to_string(line_number) +
                               ": ragged row (expected " +
                               std::to_string(table.header.size()) +
                               " cells, got " + std::to_string(cells.size()) +
                               ")");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double value = 0.0;
      const char* begin = cells[i].data();
      const char* end = begin + cells[i].size();
      const auto result = std::from_chars(begin, end, value);
      if (result.ec != std::errc{} || result.ptr != end) {
        throw std::runtime_error(path.string() + ":" +
                                 std::to_string(line_number) +
                                 ": non-numeric cell '" + cells[i] + "'");
      }
      table.columns[i].push_back(value);
    }
  }
  if (table.header.empty()) {
    throw std::runtime_error(path.string() + ": empty CSV");
  }
  return table;
}

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw std::runtime_error("cannot create directory " +
                               path.parent_path().string() + ": " +
                               ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

}  // namespace regen
