#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace psearch {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// A single emitted value. Doubles are printed at 12 significant digits in
/// json and csv output.
using Value = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string,
                           std::vector<double>>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Everything one CLI invocation emits: reproducibility metadata, scalar
/// results in insertion order, and at most a few tables.
struct Document {
  std::vector<std::pair<std::string, Value>> meta;
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<Table> tables;

  void add_meta(std::string key, Value v) { meta.emplace_back(std::move(key), std::move(v)); }
  void add(std::string key, Value v) { fields.emplace_back(std::move(key), std::move(v)); }
};

/// "%.12g" round trip: the returned double prints with at most 12 significant digits.
double round_significant(double x);

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted
/// and embedded quotes doubled.
std::string csv_escape(const std::string& field);

/// json: one object, metadata keys first, then fields, then each table as an
/// array of row objects under its name.
/// csv: metadata as leading "# key: value" lines, then the first table (or a
/// one-row table built from the scalar fields when there is none).
/// text: "key: value" lines followed by aligned tables.
void render(const Document& doc, Format format, std::ostream& out);

std::string render_to_string(const Document& doc, Format format);

}  // namespace psearch
