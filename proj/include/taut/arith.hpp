#pragma once

#include "taut/rational.hpp"

#include <vector>

namespace taut {

/// Bernoulli numbers B_0..B_n with the convention B_1 = -1/2, generated by
/// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
class BernoulliTable {
public:
  explicit BernoulliTable(int max_index);

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }

private:
  std::vector<Rational> values_;
};

/// B_n from a process-wide memo table that grows on demand. Safe to call
/// concurrently.
Rational bernoulli(int n);

/// zeta(1 - 2m) = (-1)^m |B_{2m}| / (2m), m >= 1.
Rational zeta_neg(int m);

/// Hodge integral of lambda_1 ... lambda_g on the compactified moduli space:
/// prod_{i=1}^{g} |B_{2i}| / (4i).
Rational gamma_g(int g);

/// Binomial coefficient C(n, k) as an exact integer (0 outside 0 <= k <= n).
Integer binomial(int n, int k);

} // namespace taut
