#include "unispec/table.hpp"

#include <json.hpp>

#include "unispec/errors.hpp"

namespace unispec {

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw_invalid("unknown format '" + std::string(text) + "', expected csv or json");
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw_invariant("table row width does not match header");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  append_line(out, columns);
  for (const auto& row : rows) append_line(out, row);
  for (const auto& line : footer) out += "# " + line + "\n";
  return out;
}

std::string Table::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["columns"] = columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
    j["rows"].push_back(std::move(obj));
  }
  j["footer"] = footer;
  return j.dump(2) + "\n";
}

std::string Table::render(Format format) const { return format == Format::Csv ? to_csv() : to_json(); }

}  // namespace unispec
