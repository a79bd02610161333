#include "subapprox/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace subapprox {
namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return format_real(v);
            }
            return v;
        },
        c);
}

}  // namespace

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return format_real(v);
            else return v;
        },
        c);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match the table header");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    const bool tagged = csv_schema_column && !schema.empty();
    if (tagged) os << "schema";
    for (std::size_t k = 0; k < columns.size(); ++k) os << (k || tagged ? "," : "") << csv_escape(columns[k]);
    os << '\n';
    for (const auto& row : rows) {
        if (tagged) os << csv_escape(schema);
        for (std::size_t k = 0; k < row.size(); ++k) os << (k || tagged ? "," : "") << csv_escape(format_cell(row[k]));
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const {
    nlohmann::ordered_json doc;
    doc["schema"] = schema;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) cfg[key] = to_json(value);
    doc["config"] = cfg;
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < row.size(); ++k) r[columns[k]] = to_json(row[k]);
        rows_json.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows_json);
    os << doc.dump(2) << '\n';
}

}  // namespace subapprox
