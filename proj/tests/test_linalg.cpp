#include "taut/linalg.hpp"

#include <doctest.h>

using namespace taut;

namespace {

Matrix from(std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j];
  return m;
}

} // namespace

TEST_CASE("exact linear algebra") {
  Matrix a = from({{2, 1}, {1, 3}});
  CHECK(determinant(a) == 5);
  auto x = solve(a, {Rational(3), Rational(4)});
  CHECK(x == std::vector<Rational>{1, 1});
  Matrix s = from({{1, 2}, {2, 4}});
  CHECK(determinant(s) == 0);
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS(solve(s, {Rational(1), Rational(2)}), std::domain_error);
  auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + 2 * ns[0][1] == 0);
  CHECK(a.transpose()(0, 1) == 1);
  CHECK(nullspace(Matrix(0, 3)).size() == 3);
}
