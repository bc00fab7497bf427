#pragma once

#include "taut/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace taut {

/// Exponent vector (e_1, ..., e_g) for lambda_1^{e_1} ... lambda_g^{e_g}.
using Exponents = std::vector<int>;

int weighted_degree(const Exponents& e);

/// Polynomial in lambda_1..lambda_g with arbitrary exponents, before any
/// reduction modulo Mumford's relation.
class Polynomial {
public:
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  /// lambda_k, with lambda_0 = 1 and lambda_k = 0 for k < 0 or k > num_vars.
  static Polynomial generator(int num_vars, int k);
  static Polynomial constant(int num_vars, const Rational& c);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator*(const Polynomial& other) const;

  bool operator==(const Polynomial&) const = default;

private:
  int num_vars_;
  std::map<Exponents, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

/// Degree-2k graded piece of (1 + l_1 + ... + l_g)(1 - l_1 + ... + (-1)^g l_g) - 1,
/// i.e. sum_{i+j=2k} (-1)^j l_i l_j with l_0 = 1. Requires 1 <= k <= g.
Polynomial mumford_graded_relation(int g, int k);

/// "l1^2 - 2*l2" style rendering, for diagnostics.
std::string render(const Polynomial& p);

} // namespace taut
