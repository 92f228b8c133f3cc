#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "polyspline/error.hpp"

namespace polyspline::cli {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "tsv") return Format::tsv;
  if (name == "json") return Format::json;
  throw ValidationError("unknown format '" + std::string(name) + "' (expected text, tsv or json)");
}

namespace {

std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.fields) os << k << ": " << v << "\n";
  for (const auto& t : r.tables) {
    os << "\n" << t.name << ":\n";
    std::vector<std::size_t> width(t.headers.size(), 0);
    for (std::size_t j = 0; j < t.headers.size(); ++j) width[j] = t.headers[j].size();
    for (const auto& row : t.rows)
      for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    auto line = [&](const std::vector<std::string>& cells) {
      os << " ";
      for (std::size_t j = 0; j < cells.size(); ++j) {
        os << " " << cells[j];
        if (j + 1 < cells.size()) os << std::string(width[j] - cells[j].size(), ' ');
      }
      os << "\n";
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_tsv(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.fields) os << k << "\t" << v << "\n";
  for (const auto& t : r.tables) {
    os << "# " << t.name << "\n";
    for (std::size_t j = 0; j < t.headers.size(); ++j)
      os << (j ? "\t" : "") << t.headers[j];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "\t" : "") << row[j];
      os << "\n";
    }
  }
  for (const auto& n : r.notes) os << "# note\t" << n << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json doc;
  for (const auto& [k, v] : r.fields) doc[k] = v;
  for (const auto& t : r.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t j = 0; j < row.size() && j < t.headers.size(); ++j)
        obj[t.headers[j]] = row[j];
      rows.push_back(std::move(obj));
    }
    doc[t.name] = std::move(rows);
  }
  if (!r.notes.empty()) doc["notes"] = r.notes;
  return doc.dump(2) + "\n";
}

} // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::text: return render_text(r);
    case Format::tsv: return render_tsv(r);
    case Format::json: return render_json(r);
  }
  return {};
}

} // namespace polyspline::cli
