#include "taut/rational.hpp"

#include "taut/errors.hpp"

#include <cctype>

namespace taut {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "' (expected \"p/q\" or \"p\")");
  Integer d = parse_integer(den);
  if (d == 0)
    throw ValidationError("zero denominator in rational '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

} // namespace taut
