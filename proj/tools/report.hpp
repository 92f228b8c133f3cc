#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace polyspline::cli {

enum class Format { text, tsv, json };

Format parse_format(std::string_view name); // throws ValidationError

/// Structured command result: ordered key/value fields, optional named
/// tables and free-form notes. Rendering is deterministic; rationals are
/// carried as exact strings and never as floating point.
struct Report {
  struct Table {
    std::string name;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
  };

  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;
  std::vector<std::string> notes;

  void field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
};

std::string render(const Report& r, Format f);

} // namespace polyspline::cli
