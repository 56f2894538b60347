#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace udw::app {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);

/// CSV with a header row; doubles with 17 significant digits; fields quoted
/// when they contain a comma, quote or newline.
void write_csv(const Table& table, std::ostream& out);

/// Array of records, keys in column order.
void write_json(const Table& table, std::ostream& out);

/// Writes to `path`, or to stdout when path is empty or "-".
void emit(const Table& table, Format format, const std::string& path);

std::string format_double(double value);

}  // namespace udw::app
