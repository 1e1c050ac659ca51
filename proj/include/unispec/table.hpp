#ifndef UNISPEC_TABLE_HPP
#define UNISPEC_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace unispec {

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

/// A rectangular table of strings plus free-form footer lines. Every CLI
/// command produces one; rendering is deterministic byte for byte.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;

  void add_row(std::vector<std::string> row);
  /// CSV: header, rows, then footer lines prefixed with "# ".
  std::string to_csv() const;
  /// JSON object {"title", "columns", "rows": [{column: value}], "footer"}.
  std::string to_json() const;
  std::string render(Format format) const;
};

}  // namespace unispec

#endif  // UNISPEC_TABLE_HPP
