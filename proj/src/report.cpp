#include "psearch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "psearch/errors.hpp"

namespace psearch {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string to_text(const Value& v, int digits) {
  struct Visitor {
    int digits;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(double d) const { return format_double(d, digits); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<double>& xs) const {
      std::string joined;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) joined += ';';
        joined += format_double(xs[i], digits);
      }
      return joined;
    }
  };
  return std::visit(Visitor{digits}, v);
}

ordered_json to_json(const Value& v) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(std::int64_t i) const { return i; }
    ordered_json operator()(std::uint64_t u) const { return u; }
    ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      return round_significant(d);
    }
    ordered_json operator()(const std::string& s) const { return s; }
    ordered_json operator()(const std::vector<double>& xs) const {
      ordered_json arr = ordered_json::array();
      for (double x : xs) arr.push_back((*this)(x));
      return arr;
    }
  };
  return std::visit(Visitor{}, v);
}

void render_json(const Document& doc, std::ostream& out) {
  ordered_json root = ordered_json::object();
  for (const auto& [k, v] : doc.meta) root[k] = to_json(v);
  for (const auto& [k, v] : doc.fields) root[k] = to_json(v);
  for (const auto& table : doc.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
      rows.push_back(std::move(obj));
    }
    root[table.name] = std::move(rows);
  }
  out << root.dump(2) << '\n';
}

void write_csv_row(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(cells[i]);
  }
  out << "\r\n";
}

void render_csv(const Document& doc, std::ostream& out) {
  for (const auto& [k, v] : doc.meta) out << "# " << k << ": " << to_text(v, 12) << "\r\n";
  Table scalars;
  const Table* table = nullptr;
  if (!doc.tables.empty()) {
    table = &doc.tables.front();
  } else {
    scalars.rows.emplace_back();
    for (const auto& [k, v] : doc.fields) {
      scalars.columns.push_back(k);
      scalars.rows.back().push_back(v);
    }
    table = &scalars;
  }
  write_csv_row(table->columns, out);
  for (const auto& row : table->rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& v : row) cells.push_back(to_text(v, 12));
    write_csv_row(cells, out);
  }
}

void render_text(const Document& doc, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : doc.fields) width = std::max(width, k.size());
  for (const auto& [k, v] : doc.fields) {
    out << k << std::string(width - k.size(), ' ') << "  " << to_text(v, 6) << '\n';
  }
  for (const auto& table : doc.tables) {
    out << '\n' << table.name << '\n';
    std::vector<std::size_t> widths(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < table.columns.size(); ++c) widths[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(to_text(row[c], 6));
        widths[c] = std::max(widths[c], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) out << "  ";
        out << std::string(widths[c] - line[c].size(), ' ') << line[c];
      }
      out << '\n';
    };
    emit(table.columns);
    for (const auto& line : cells) emit(line);
  }
  for (const auto& [k, v] : doc.meta) out << "# " << k << ": " << to_text(v, 12) << '\n';
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InvalidInstance("unknown format '" + name + "' (expected text, json or csv)");
}

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void render(const Document& doc, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: render_json(doc, out); break;
    case Format::csv: render_csv(doc, out); break;
    case Format::text: render_text(doc, out); break;
  }
}

std::string render_to_string(const Document& doc, Format format) {
  std::ostringstream out;
  render(doc, format, out);
  return out.str();
}

}  // namespace psearch
