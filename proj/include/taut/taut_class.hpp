#pragma once

#include "taut/monomial.hpp"
#include "taut/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace taut {

/// Which ring a class lives in. `compact` and `lagrangian` are the same
/// ring and differ only in how integrals are normalized; `open` is the
/// quotient by lambda_g.
enum class Variant { compact, open, lagrangian };

std::string_view variant_name(Variant v); // "cpt", "open", "lg"
Variant parse_variant(std::string_view name);

/// Top nonzero degree: g(g+1)/2, or g(g-1)/2 for the open variant.
int top_degree(int genus, Variant v);

using TermMap = std::map<SquareFreeMonomial, Rational>;

/// Exact linear combination of square-free lambda-monomials. Zero
/// coefficients are never stored, so equal classes compare equal.
class TautClass {
public:
  TautClass(int genus, Variant variant);
  TautClass(int genus, Variant variant, TermMap terms);

  static TautClass unit(int genus, Variant variant);
  static TautClass monomial(int genus, Variant variant, SquareFreeMonomial m, Rational coeff = 1);
  /// lambda_k with the conventions lambda_0 = 1, lambda_k = 0 outside 0..g
  /// (and lambda_g = 0 in the open variant).
  static TautClass generator(int genus, Variant variant, int k);

  int genus() const { return genus_; }
  Variant variant() const { return variant_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(SquareFreeMonomial m) const;

  void add_term(SquareFreeMonomial m, const Rational& c);
  TautClass& operator+=(const TautClass& other);
  TautClass& operator-=(const TautClass& other);
  TautClass& operator*=(const Rational& s);

  /// Terms of weighted degree d only.
  TautClass homogeneous_part(int d) const;
  /// Same terms, relabelled as another variant (no reduction performed).
  TautClass relabel(Variant v) const;

  bool operator==(const TautClass&) const = default;

private:
  void check_monomial(SquareFreeMonomial m) const;

  int genus_;
  Variant variant_;
  TermMap terms_;
};

TautClass operator+(TautClass a, const TautClass& b);
TautClass operator-(TautClass a, const TautClass& b);
TautClass operator*(const Rational& s, TautClass a);

/// "420 * l3*l2 - 1/2 * l1", or "0".
std::string render(const TautClass& c);

} // namespace taut
