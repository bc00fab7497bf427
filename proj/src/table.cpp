#include "taut/table.hpp"

#include "taut/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace taut {

Format parse_format(std::string_view name) {
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  throw ValidationError("unknown format: " + std::string(name));
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("table row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

namespace {

std::string plain(const Cell& c) { return c.kind == Cell::Kind::monomial ? render_ascending(c.monomial) : c.text; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  std::string s = plain(c);
  if (c.kind == Cell::Kind::rational)
    return csv_quote(s);
  if (s.find_first_of(",\"\n") != std::string::npos)
    return csv_quote(s);
  return s;
}

void emit_text(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    width[i] = t.columns[i].size();
  for (auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], plain(row[i]).size());
  auto line = [&](auto&& cell_at) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::string c = cell_at(i);
      s += c;
      if (i + 1 < t.columns.size())
        s += std::string(width[i] - c.size() + 2, ' ');
    }
    out << s << '\n';
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (auto& row : t.rows)
    line([&](std::size_t i) { return plain(row[i]); });
}

void emit_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void emit_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      switch (c.kind) {
      case Cell::Kind::integer:
        obj[t.columns[i]] = std::stol(c.text);
        break;
      case Cell::Kind::monomial:
        obj[t.columns[i]] = c.monomial.indices();
        break;
      case Cell::Kind::boolean:
        obj[t.columns[i]] = c.flag;
        break;
      default:
        obj[t.columns[i]] = c.text;
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

} // namespace

void emit_table(const Table& t, Format format, std::ostream& out) {
  switch (format) {
  case Format::text:
    emit_text(t, out);
    break;
  case Format::csv:
    emit_csv(t, out);
    break;
  case Format::json:
    emit_json(t, out);
    break;
  }
}

} // namespace taut
