#include "csalign/io_util.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace csalign {

std::string fmt_g9(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

double parse_double(const std::string& text, const std::string& context) {
  const std::string trimmed = trim(text);
  if (trimmed.empty()) {
    throw std::runtime_error("empty numeric field in " + context);
  }
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(trimmed, &consumed);
  } catch (const std::exception&) {
    throw std::runtime_error("not a number: '" + trimmed + "' in " + context);
  }
  if (consumed != trimmed.size()) {
    throw std::runtime_error("not a number: '" + trimmed + "' in " + context);
  }
  return value;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string trim(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable read_csv(const std::filesystem::path& path, bool hash_header) {
  const std::vector<std::string> lines = read_lines(path);
  CsvTable table;
  bool have_header = false;
  bool have_data = false;
  for (const std::string& line : lines) {
    if (trim(line).empty()) continue;
    if (!have_data && line.front() == '#') {
      if (!hash_header) continue;
      // AudioSet writes its column names as the last '#' line before data.
      std::string stripped = trim(line.substr(1));
      if (stripped.empty()) continue;
      table.header = split_csv_line(stripped);
      for (std::string& h : table.header) h = trim(h);
      have_header = true;
      continue;
    }
    std::vector<std::string> fields = split_csv_line(line);
    if (!have_header) {
      for (std::string& f : fields) f = trim(f);
      table.header = std::move(fields);
      have_header = true;
    } else {
      table.rows.push_back(std::move(fields));
      have_data = true;
    }
  }
  if (!have_header) {
    throw std::runtime_error("empty CSV file: " + path.string());
  }
  return table;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace csalign
