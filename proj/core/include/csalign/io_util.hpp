#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace csalign {

/// Formats a double with 9 significant digits ("%.9g"). Every float the
/// library writes goes through this so seeded runs produce byte-identical
/// output files.
std::string fmt_g9(double value);

/// Parses a double, rejecting trailing garbage and empty fields.
/// Throws std::runtime_error mentioning `context` on failure.
double parse_double(const std::string& text, const std::string& context);

/// Reads all lines of a text file. Throws if the file cannot be opened.
/// Strips trailing '\r' so CRLF inputs parse like LF ones.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Splits one CSV line. Handles double-quoted fields with embedded commas
/// and doubled quotes; does not handle embedded newlines.
std::vector<std::string> split_csv_line(const std::string& line);

/// Strips leading/trailing spaces and tabs.
std::string trim(const std::string& text);

/// Parsed CSV: header plus data rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, or -1.
  int column(const std::string& name) const;
};

/// Reads a CSV file with a header row. Lines starting with '#' before the
/// header are skipped (AudioSet-style preamble); a '#'-prefixed line that
/// itself names columns is used as the header when `hash_header` is true.
CsvTable read_csv(const std::filesystem::path& path, bool hash_header = false);

/// Opens `path` for writing, throws on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace csalign
