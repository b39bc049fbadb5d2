#include "output.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace qortho::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

void write_csv(std::ostream& out, const Table& t) {
  // RFC 4180 records end in CRLF.
  auto line = [&](const auto& fields, auto&& text) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(text(fields[i]));
    }
    out << "\r\n";
  };
  line(t.header, [](const std::string& s) { return s; });
  for (const auto& row : t.rows) line(row, [](const Cell& c) { return cell_text(c); });
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

nlohmann::ordered_json table_json(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::monostate>(c)) obj[t.header[i]] = nullptr;
      else if (auto* s = std::get_if<std::string>(&c)) obj[t.header[i]] = *s;
      else if (auto* x = std::get_if<double>(&c)) obj[t.header[i]] = json_number(*x);
      else if (auto* n = std::get_if<std::int64_t>(&c)) obj[t.header[i]] = *n;
      else obj[t.header[i]] = std::get<bool>(c);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

void write_json(std::ostream& out, const nlohmann::ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

}  // namespace qortho::cli
