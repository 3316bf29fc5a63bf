#pragma once

// Tabular output shared by every subcommand: one body table plus an
// optional one-row summary, rendered as CSV, JSON or Markdown.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qls::cli {

enum class Format { csv, json, md };

std::optional<Format> parse_format(std::string_view s);

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Column {
  std::string name;
  int md_digits = 4;  // significant digits in Markdown
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Document {
  Table body;
  std::optional<Table> summary;
};

// Machine formats: scientific notation, 6 significant digits.
std::string format_number(double v);

std::string render(const Document& doc, Format format);

}  // namespace qls::cli
