#pragma once

// Tables and reports: RFC-4180 CSV and JSON, floats as shortest round-trip
// decimals of the double nearest the computed value.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qortho::cli {

using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Shortest decimal that reads back to the same double; "nan", "inf", "-inf"
// for non-finite values.
std::string format_double(double x);

// Quotes a field when it holds a comma, quote, CR or LF; doubles inner quotes.
std::string csv_escape(const std::string& field);

std::string cell_text(const Cell& c);

void write_csv(std::ostream& out, const Table& t);

// Array of objects keyed by the header, in header order.
nlohmann::ordered_json table_json(const Table& t);

// Non-finite doubles become strings so that the document stays valid JSON.
nlohmann::ordered_json json_number(double x);

// Two-space indent, trailing newline.
void write_json(std::ostream& out, const nlohmann::ordered_json& doc);

}  // namespace qortho::cli
