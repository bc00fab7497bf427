#include "taut/taut_class.hpp"

#include "taut/errors.hpp"

#include <stdexcept>

namespace taut {

std::string_view variant_name(Variant v) {
  switch (v) {
  case Variant::compact:
    return "cpt";
  case Variant::open:
    return "open";
  case Variant::lagrangian:
    return "lg";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "cpt")
    return Variant::compact;
  if (name == "open")
    return Variant::open;
  if (name == "lg")
    return Variant::lagrangian;
  throw ValidationError("unknown variant '" + std::string(name) + "' (expected cpt, open or lg)");
}

int top_degree(int genus, Variant v) {
  return v == Variant::open ? genus * (genus - 1) / 2 : genus * (genus + 1) / 2;
}

TautClass::TautClass(int genus, Variant variant) : genus_(genus), variant_(variant) {
  if (genus < 1 || genus > SquareFreeMonomial::kMaxIndex)
    throw std::invalid_argument("TautClass: genus out of range");
}

TautClass::TautClass(int genus, Variant variant, TermMap terms) : TautClass(genus, variant) {
  for (auto& [m, c] : terms)
    add_term(m, c);
}

TautClass TautClass::unit(int genus, Variant variant) { return monomial(genus, variant, {}); }

TautClass TautClass::monomial(int genus, Variant variant, SquareFreeMonomial m, Rational coeff) {
  TautClass c(genus, variant);
  c.add_term(m, coeff);
  return c;
}

TautClass TautClass::generator(int genus, Variant variant, int k) {
  if (k == 0)
    return unit(genus, variant);
  TautClass c(genus, variant);
  if (k < 0 || k > genus || (variant == Variant::open && k == genus))
    return c;
  c.add_term(SquareFreeMonomial().with(k), 1);
  return c;
}

Rational TautClass::coeff(SquareFreeMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TautClass::check_monomial(SquareFreeMonomial m) const {
  int limit = variant_ == Variant::open ? genus_ - 1 : genus_;
  if (m.max_index() > limit)
    throw std::invalid_argument("monomial " + render(m) + " is not valid in genus " + std::to_string(genus_) +
                                " (" + std::string(variant_name(variant_)) + ")");
}

void TautClass::add_term(SquareFreeMonomial m, const Rational& c) {
  Rational v = c;
  v.canonicalize(); // mpq_class(p, q) does not reduce on its own
  if (v == 0)
    return;
  check_monomial(m);
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      terms_.erase(it);
  }
}

namespace {
void require_same_ring(const TautClass& a, const TautClass& b) {
  if (a.genus() != b.genus() || a.variant() != b.variant())
    throw std::invalid_argument("genus/variant mismatch between classes");
}
} // namespace

TautClass& TautClass::operator+=(const TautClass& other) {
  require_same_ring(*this, other);
  for (auto& [m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& other) {
  require_same_ring(*this, other);
  for (auto& [m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_)
    c *= s;
  return *this;
}

TautClass TautClass::homogeneous_part(int d) const {
  TautClass out(genus_, variant_);
  for (auto& [m, c] : terms_)
    if (m.degree() == d)
      out.terms_.emplace(m, c);
  return out;
}

TautClass TautClass::relabel(Variant v) const { return TautClass(genus_, v, terms_); }

TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
TautClass operator*(const Rational& s, TautClass a) { return a *= s; }

std::string render(const TautClass& c) {
  if (c.is_zero())
    return "0";
  std::string out;
  for (auto& [m, coeff] : c.terms()) {
    Rational mag = abs(coeff);
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    out += to_string(mag);
    if (!m.is_unit())
      out += " * " + render(m);
  }
  return out;
}

} // namespace taut
