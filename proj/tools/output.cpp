#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace qls::cli {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "md") return Format::md;
  return std::nullopt;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return csv_escape(v);
      },
      cell);
}

std::string md_cell(const Cell& cell, int digits) {
  return std::visit(
      [digits](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        else if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.*g", digits, v);
          return buf;
        } else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "yes" : "no";
        else return v;
      },
      cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        // the same rounded value the CSV carries
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::strtod(format_number(v).c_str(), nullptr);
        } else return v;
      },
      cell);
}

void check_shape(const Table& t) {
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::logic_error("table row width does not match its header");
    }
  }
}

void write_csv(std::string& out, const Table& t, std::string_view prefix) {
  out += prefix;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i].name;
  }
  out += '\n';
  for (const auto& row : t.rows) {
    out += prefix;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
}

void write_md(std::string& out, const Table& t) {
  out += '|';
  for (const auto& c : t.columns) out += ' ' + c.name + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& row : t.rows) {
    out += '|';
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += ' ' + md_cell(row[i], t.columns[i].md_digits) + " |";
    }
    out += '\n';
  }
}

nlohmann::ordered_json json_row(const Table& t, const std::vector<Cell>& row) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < row.size(); ++i) {
    obj[t.columns[i].name] = json_cell(row[i]);
  }
  return obj;
}

}  // namespace

std::string render(const Document& doc, Format format) {
  check_shape(doc.body);
  if (doc.summary) check_shape(*doc.summary);
  std::string out;
  switch (format) {
    case Format::csv:
      write_csv(out, doc.body, "");
      if (doc.summary) write_csv(out, *doc.summary, "# ");
      break;
    case Format::md:
      write_md(out, doc.body);
      if (doc.summary) {
        out += '\n';
        write_md(out, *doc.summary);
      }
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : doc.body.rows) j["rows"].push_back(json_row(doc.body, row));
      if (doc.summary && !doc.summary->rows.empty()) {
        j["summary"] = json_row(*doc.summary, doc.summary->rows.front());
      }
      out = j.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace qls::cli
