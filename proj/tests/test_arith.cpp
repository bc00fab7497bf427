#include "taut/arith.hpp"
#include "taut/errors.hpp"

#include <doctest.h>

using namespace taut;

namespace {

// Akiyama-Tanigawa: produces B_n with B_1 = +1/2.
Rational akiyama_tanigawa(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
  }
  return a[0];
}

} // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("+1/3")) == "1/3");
  CHECK_THROWS_AS(parse_rational("2/-4"), ValidationError);
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", "/3", "3/"})
    CHECK_THROWS_AS(parse_rational(bad), ValidationError);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(4) == 16);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 2; n <= 40; ++n)
    CHECK(bernoulli(n) == akiyama_tanigawa(n));
  for (int n = 1; n <= 30; ++n) {
    Rational s = 0;
    for (int j = 0; j <= n; ++j)
      s += Rational(binomial(n + 1, j)) * bernoulli(j);
    CHECK(s == 0);
  }
  BernoulliTable t(10);
  CHECK(t.max_index() == 10);
  CHECK(t[10] == Rational(5, 66));
}

TEST_CASE("zeta at negative odd integers") {
  CHECK(zeta_neg(1) == Rational(-1, 12));
  CHECK(zeta_neg(2) == Rational(1, 120));
  CHECK(zeta_neg(3) == Rational(-1, 252));
}

TEST_CASE("gamma_g") {
  CHECK(gamma_g(1) == Rational(1, 24));
  CHECK(gamma_g(2) == Rational(1, 5760));
  CHECK(gamma_g(4) == Rational(1, 1393459200));
  for (int g = 1; g <= 12; ++g) {
    Rational z = 1;
    for (int i = 1; i <= g; ++i)
      z *= zeta_neg(i);
    long e = static_cast<long>(g) * (g + 1) / 2;
    Rational expected = (e % 2 ? Rational(-1) : Rational(1)) * pow2(-g) * z;
    CHECK(gamma_g(g) == expected);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}
