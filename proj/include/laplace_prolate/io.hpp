#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laplace_prolate::io {

/// Parses a real given as a decimal literal, a fraction ("-3/4"), or a
/// multiple of pi ("pi", "5pi", "5*pi", "-pi/2"). Returns nullopt on junk.
std::optional<double> parse_real(std::string_view text);

/// Shortest decimal string that reads back to the same double.
std::string shortest(double v);

/// Parses a string written by `shortest`; nullopt unless the whole string is consumed.
std::optional<double> parse_shortest(std::string_view text);

/// "%.16e", the CSV number format.
std::string sci(double v);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
/// Throws CacheError on any I/O failure.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

/// Whole file; throws CacheError if it cannot be read.
std::string read_file(const std::filesystem::path& path);

/// CSV text with one header row. Fields are written verbatim (callers only
/// pass numbers and plain identifiers).
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace laplace_prolate::io
