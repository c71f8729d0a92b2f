#include "render.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lambdan::cli {
namespace {

constexpr int kReplayDigits = 17;

std::string join_coords(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_number(v[i], kReplayDigits);
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string cell_text(const Cell& cell, int digits) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d, digits);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return join_coords(std::get<std::vector<double>>(cell));
}

std::string cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_number(*d, kReplayDigits);
  }
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) {
    return '"' + json_escape(*s) + '"';
  }
  const auto& v = std::get<std::vector<double>>(cell);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i], kReplayDigits);
  }
  return out + "]";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "markdown") return OutputFormat::Markdown;
  throw std::invalid_argument("unknown format '" + name + "' (csv|json|markdown)");
}

std::string format_number(double v, int digits) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<Row>& rows, OutputFormat format,
                         int digits) {
  std::string out;
  switch (format) {
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
      }
      out += '\n';
      for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out += ',';
          out += cell_text(row[i], digits);
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      out += "[\n";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "  {";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
          if (i) out += ", ";
          out += '"' + json_escape(header[i]) + "\": " + cell_json(rows[r][i]);
        }
        out += r + 1 < rows.size() ? "},\n" : "}\n";
      }
      out += "]\n";
      return out;
    }
    case OutputFormat::Markdown: {
      out += '|';
      for (const auto& h : header) out += ' ' + h + " |";
      out += "\n|";
      for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
      out += '\n';
      for (const Row& row : rows) {
        out += '|';
        for (const Cell& cell : row) out += ' ' + cell_text(cell, digits) + " |";
        out += '\n';
      }
      return out;
    }
  }
  return out;
}

}  // namespace lambdan::cli
