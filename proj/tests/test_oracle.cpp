#include "taut/oracle.hpp"

#include <doctest.h>

using namespace taut;
using namespace taut::oracle;

namespace {

Polynomial mono(int g, Exponents e, Rational c = 1) {
  Polynomial p(g);
  p.add_term(e, c);
  return p;
}

TautClass sq(int g, std::vector<int> idx, Rational c = 1) {
  return TautClass::monomial(g, Variant::compact, SquareFreeMonomial::from_indices(idx), c);
}

} // namespace

TEST_CASE("oracle normal forms") {
  CHECK(oracle_normal_form(mono(2, {2, 0})).value == sq(2, {2}, 2));
  CHECK(oracle_normal_form(mono(2, {3, 0})).value == sq(2, {1, 2}, 2));
  CHECK(oracle_normal_form(mono(3, {1, 0, 1}, 5)).value == sq(3, {1, 3}, 5));
  auto high = oracle_normal_form(mono(2, {2, 1}));
  CHECK(high.value.is_zero());
  CHECK(high.degree_exceeded);
  CHECK(oracle_normal_form(mono(1, {2})).value.is_zero());
}

TEST_CASE("slice invariants") {
  for (int g = 1; g <= 5; ++g) {
    auto dims = poincare_coefficients(g);
    for (int d = 0; d <= g * (g + 1) / 2; ++d) {
      DegreeSlice s(g, d);
      CHECK(s.rank() + s.square_free_count() == s.monomials().size());
      CHECK(static_cast<long>(s.square_free_count()) == dims[static_cast<std::size_t>(d)]);
      CHECK(s.projection_kills_relations());
      for (auto& e : s.monomials()) {
        bool square_free = true;
        for (int x : e)
          square_free = square_free && x <= 1;
        if (!square_free)
          continue;
        auto nf = s.normal_form(e);
        REQUIRE(nf.size() == 1);
        CHECK(nf.begin()->second == 1);
      }
    }
  }
}

TEST_CASE("tables agree with the oracle") {
  for (int g : {2, 4, 6}) {
    auto report = oracle_compare(*shared_ring(g));
    CHECK(report.ok());
    CHECK(report.checked == static_cast<std::size_t>(g) << g);
  }
}

TEST_CASE("exponent helpers") {
  auto m = SquareFreeMonomial::from_indices({1, 3});
  CHECK(exponents_of(3, m) == Exponents{1, 0, 1});
  CHECK(exponents_of(3, m, 3) == Exponents{1, 0, 2});
}
