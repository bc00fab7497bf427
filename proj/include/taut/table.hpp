#pragma once

#include "taut/monomial.hpp"
#include "taut/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

enum class Format { text, json, csv };
Format parse_format(std::string_view name);

struct Cell {
  enum class Kind { text, integer, rational, monomial, boolean };

  Kind kind = Kind::text;
  std::string text;          // text, integer, rational (canonical "p/q")
  SquareFreeMonomial monomial;
  bool flag = false;

  static Cell str(std::string s) { return {Kind::text, std::move(s), {}, false}; }
  static Cell integer(long v) { return {Kind::integer, std::to_string(v), {}, false}; }
  static Cell rational(const Rational& q) { return {Kind::rational, to_string(q), {}, false}; }
  static Cell mono(SquareFreeMonomial m) { return {Kind::monomial, {}, m, false}; }
  static Cell boolean(bool b) { return {Kind::boolean, b ? "true" : "false", {}, b}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Text: left-aligned columns separated by two spaces. CSV: rationals and
/// text with separators are quoted. JSON: array of objects, rationals as
/// strings, monomials as index arrays.
void emit_table(const Table& t, Format format, std::ostream& out);

} // namespace taut
