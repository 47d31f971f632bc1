#include "table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "config.hpp"

namespace umbralqm {
namespace {

bool needs_quotes(std::string_view s) {
  return s.empty() || s.find_first_of(",\"\r\n") != std::string_view::npos;
}

void write_text(std::ostream& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out << s;
    return;
  }
  out << '"';
  for (char ch : s) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

std::vector<std::vector<std::string>> split_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, in_record = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch != '"') {
        field += ch;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    in_record = true;
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      in_record = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (quoted) throw ValidationError("csv: unterminated quoted field");
  if (in_record) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

bool parse_int_cell(const std::string& s, std::int64_t& v) {
  // "-0" is a real; keeping it out of integer columns preserves the sign
  if (s.empty() || s.rfind("-0", 0) == 0 || (s.size() > 1 && s[0] == '0')) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_real_cell(const std::string& s, double& v) {
  if (s == "nan") {
    v = std::nan("");
    return true;
  }
  if (s == "inf" || s == "-inf") {
    v = s[0] == '-' ? -HUGE_VAL : HUGE_VAL;
    return true;
  }
  if (s.empty()) return false;
  char* end = nullptr;
  v = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(v);
}

template <typename T, typename F>
bool try_column(const std::vector<std::string>& cells, std::vector<T>& out, F&& parse) {
  out.clear();
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    T v{};
    if (!parse(cell, v)) return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace

std::size_t Column::size() const {
  return std::visit([](const auto& v) { return v.size(); }, values);
}

Table& Table::push(Column column) {
  if (!columns_.empty() && column.size() != rows()) {
    throw std::logic_error("column '" + column.name + "' has " + std::to_string(column.size()) + " rows, expected " +
                           std::to_string(rows()));
  }
  if (has(column.name)) throw std::logic_error("duplicate column '" + column.name + "'");
  columns_.push_back(std::move(column));
  return *this;
}

Table& Table::add(std::string name, std::vector<std::int64_t> values) { return push({std::move(name), std::move(values)}); }
Table& Table::add(std::string name, std::vector<double> values) { return push({std::move(name), std::move(values)}); }
Table& Table::add(std::string name, std::vector<bool> values) { return push({std::move(name), std::move(values)}); }
Table& Table::add(std::string name, std::vector<std::string> values) { return push({std::move(name), std::move(values)}); }

bool Table::has(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return true;
  }
  return false;
}

const Column& Table::column(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

const std::vector<double>& Table::reals(std::string_view name) const {
  return std::get<std::vector<double>>(column(name).values);
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  const auto& cols = table.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j) out << ',';
    write_text(out, cols[j].name);
  }
  out << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = typename std::decay_t<decltype(v)>::value_type;
            if constexpr (std::is_same_v<T, double>) {
              out << format_real(v[i]);
            } else if constexpr (std::is_same_v<T, bool>) {
              out << (v[i] ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::string>) {
              write_text(out, v[i]);
            } else {
              out << v[i];
            }
          },
          cols[j].values);
    }
    out << '\n';
  }
}

Table parse_csv(std::string_view text) {
  const auto records = split_records(text);
  if (records.empty()) throw ValidationError("csv: missing header row");
  const auto& header = records.front();
  Table table;
  for (std::size_t j = 0; j < header.size(); ++j) {
    std::vector<std::string> cells;
    for (std::size_t i = 1; i < records.size(); ++i) {
      if (records[i].size() != header.size()) {
        throw ValidationError("csv: row " + std::to_string(i) + " has " + std::to_string(records[i].size()) +
                              " fields, header has " + std::to_string(header.size()));
      }
      cells.push_back(records[i][j]);
    }
    std::vector<std::int64_t> ints;
    std::vector<double> reals;
    std::vector<bool> bools;
    if (try_column(cells, ints, parse_int_cell)) {
      table.add(header[j], std::move(ints));
    } else if (try_column(cells, reals, parse_real_cell)) {
      table.add(header[j], std::move(reals));
    } else if (try_column(cells, bools, [](const std::string& s, bool& b) {
                 b = s == "true";
                 return b || s == "false";
               })) {
      table.add(header[j], std::move(bools));
    } else {
      table.add(header[j], std::move(cells));
    }
  }
  return table;
}

Json table_to_json(const Table& table, const Json& run_meta) {
  Json meta = run_meta;
  for (const auto& [key, value] : table.meta.items()) meta[key] = value;
  Json names = Json::array();
  Json data = Json::object();
  for (const auto& column : table.columns()) {
    names.push_back(column.name);
    Json values = Json::array();
    std::visit(
        [&](const auto& v) {
          for (const auto& x : v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
              if (std::isfinite(x)) {
                values.push_back(x);
              } else {
                values.push_back(nullptr);
              }
            } else {
              values.push_back(static_cast<std::decay_t<decltype(x)>>(x));
            }
          }
        },
        column.values);
    data[column.name] = std::move(values);
  }
  meta["columns"] = std::move(names);
  meta["rows"] = table.rows();
  return Json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

}  // namespace umbralqm
