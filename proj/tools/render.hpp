#pragma once

#include <string>
#include <variant>
#include <vector>

namespace lambdan::cli {

enum class OutputFormat { Csv, Json, Markdown };

/// "csv" | "json" | "markdown"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Shortest-form decimal with `digits` significant digits, locale-free.
std::string format_number(double v, int digits);

/// Table cell: a real (rendered with the table's digit count; always 17 in
/// JSON), an integer, a string, or a coordinate vector (rendered with 17
/// digits so reports replay exactly).
using Cell = std::variant<double, long long, std::string, std::vector<double>>;
using Row = std::vector<Cell>;

/// CSV uses '.' decimals, comma separators and LF line endings; JSON emits
/// an array of records; markdown emits a pipe table.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<Row>& rows, OutputFormat format,
                         int digits);

}  // namespace lambdan::cli
