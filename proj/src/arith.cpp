#include "taut/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace taut {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0)
    throw std::invalid_argument("BernoulliTable: negative index");
  values_.reserve(static_cast<std::size_t>(max_index) + 1);
  values_.emplace_back(1);
  for (int n = 1; n <= max_index; ++n) {
    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (int j = 0; j < n; ++j)
      acc += Rational(binomial(n + 1, j)) * values_[static_cast<std::size_t>(j)];
    values_.emplace_back(-acc / (n + 1));
  }
}

namespace {

std::mutex table_mutex;
BernoulliTable& shared_table(int need) {
  static BernoulliTable table(64);
  if (need > table.max_index())
    table = BernoulliTable(std::max(need, 2 * table.max_index()));
  return table;
}

} // namespace

Rational bernoulli(int n) {
  if (n < 0)
    throw std::invalid_argument("bernoulli: negative index " + std::to_string(n));
  std::lock_guard lock(table_mutex);
  return shared_table(n)[n];
}

Rational zeta_neg(int m) {
  if (m < 1)
    throw std::invalid_argument("zeta_neg: m must be >= 1");
  Rational v = abs(bernoulli(2 * m)) / (2 * m);
  return m % 2 == 0 ? v : Rational(-v);
}

Rational gamma_g(int g) {
  if (g < 1)
    throw std::invalid_argument("gamma_g: g must be >= 1");
  Rational prod = 1;
  for (int i = 1; i <= g; ++i)
    prod *= abs(bernoulli(2 * i)) / (4 * i);
  return prod;
}

} // namespace taut
