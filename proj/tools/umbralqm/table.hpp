#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace umbralqm {

using Json = nlohmann::ordered_json;

struct Column {
  using Values = std::variant<std::vector<std::int64_t>, std::vector<double>, std::vector<bool>,
                              std::vector<std::string>>;
  std::string name;
  Values values;

  std::size_t size() const;
};

/// Column-oriented table; every column has the same length.
class Table {
 public:
  Table& add(std::string name, std::vector<std::int64_t> values);
  Table& add(std::string name, std::vector<double> values);
  Table& add(std::string name, std::vector<bool> values);
  Table& add(std::string name, std::vector<std::string> values);

  const std::vector<Column>& columns() const { return columns_; }
  std::size_t rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
  const Column& column(std::string_view name) const;
  bool has(std::string_view name) const;
  const std::vector<double>& reals(std::string_view name) const;

  /// Free-form metadata, echoed under "meta" in JSON output.
  Json meta = Json::object();

 private:
  Table& push(Column column);
  std::vector<Column> columns_;
};

/// 17 significant digits; nan, inf, -inf for non-finite values.
std::string format_real(double v);

void write_csv(std::ostream& out, const Table& table);
/// Inverse of write_csv; column types are inferred (integer, real, bool, text).
Table parse_csv(std::string_view text);

/// {"meta": {...}, "data": {"column": [...], ...}}; non-finite reals become null.
Json table_to_json(const Table& table, const Json& run_meta);

}  // namespace umbralqm
