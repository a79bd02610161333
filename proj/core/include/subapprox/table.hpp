#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace subapprox {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Reals are written with 17 significant digits and '.' as the decimal
/// separator, independent of the global locale.
[[nodiscard]] std::string format_real(double v);
[[nodiscard]] std::string format_cell(const Cell& c);

/// A rectangular result table with a schema tag and the configuration that
/// produced it.
///
/// CSV (RFC 4180): header row first; when `schema` is set the first column
/// is named "schema" and carries the tag on every row, unless
/// `csv_schema_column` is false. JSON: one object
/// {"schema": ..., "config": {...}, "rows": [{column: value, ...}, ...]}.
struct Table {
    std::string schema;
    std::vector<std::pair<std::string, Cell>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool csv_schema_column = true;

    void add_row(std::vector<Cell> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

}  // namespace subapprox
