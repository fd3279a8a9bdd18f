#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace regen {

// Column-oriented numeric CSV: a header row of labels followed by rows of
// numbers. Cells are comma-separated, the decimal point is '.', lines end
// with LF.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // one vector per header label
};

// Reads a numeric CSV; throws std::runtime_error on missing files, ragged
// rows, or non-numeric cells.
CsvTable read_csv(const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double ("360", not
// "360.000000").
std::string format_double(double value);

// Writes text to path, creating parent directories; throws on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace regen
