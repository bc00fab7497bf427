#include "taut/arith.hpp"
#include "taut/errors.hpp"
#include "taut/oracle.hpp"
#include "taut/ring.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace taut;

namespace {

TautClass lam(const RingContext& r, Variant v, std::initializer_list<int> idx, Rational c = 1) {
  TautClass out = TautClass::unit(r.genus(), v);
  for (int i : idx)
    out = r.mul_generator(i, out);
  return c * out;
}

TautClass random_class(const RingContext& r, Variant v, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  TautClass out(r.genus(), v);
  for (int d = 0; d <= top_degree(r.genus(), v); ++d)
    for (auto m : r.basis(d, v))
      if (rng() % 3 == 0)
        out.add_term(m, Rational(coeff(rng)) / (1 + static_cast<int>(rng() % 3)));
  return out;
}

// Standard fillings of a shifted shape, by removing corners.
long shifted_tableaux(std::vector<int> shape, std::map<std::vector<int>, long>& memo) {
  while (!shape.empty() && shape.back() == 0)
    shape.pop_back();
  if (shape.empty())
    return 1;
  if (auto it = memo.find(shape); it != memo.end())
    return it->second;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    int next = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] - 1 > next || (shape[i] == 1 && next == 0)) {
      auto s = shape;
      --s[i];
      total += shifted_tableaux(s, memo);
    }
  }
  return memo[shape] = total;
}

} // namespace

TEST_CASE("basis and Poincare polynomial") {
  auto r2 = build_ring(2);
  CHECK(r2->total_dimension(Variant::compact) == 4);
  CHECK(r2->basis(3, Variant::compact) == std::vector{SquareFreeMonomial::from_indices({1, 2})});
  CHECK(build_ring(1)->total_dimension(Variant::compact) == 2);
  for (int g = 1; g <= 8; ++g) {
    auto r = shared_ring(g);
    CHECK(r->total_dimension(Variant::compact) == (std::size_t{1} << g));
    CHECK(r->total_dimension(Variant::open) == (std::size_t{1} << (g - 1)));
    CHECK(r->dimensions(Variant::compact) == poincare_coefficients(g));
  }
  CHECK(poincare_coefficients(4) == std::vector<long>{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("genus limits") {
  CHECK_THROWS_AS(build_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(build_ring(9), ResourceLimitError);
  CHECK_THROWS_AS(build_ring(11, {.allow_large = true}), ResourceLimitError);
}

TEST_CASE("Mumford graded relations") {
  CHECK(render(mumford_graded_relation(1, 1)) == "-l1^2");
  CHECK(render(mumford_graded_relation(2, 1)) == "-l1^2 + 2*l2");
  auto p = mumford_graded_relation(4, 2);
  Polynomial expected(4);
  expected.add_term({0, 2, 0, 0}, 1);
  expected.add_term({1, 0, 1, 0}, -2);
  expected.add_term({0, 0, 0, 1}, 2);
  CHECK(p == expected);
  CHECK_THROWS_AS(mumford_graded_relation(2, 3), std::out_of_range);
}

TEST_CASE("multiplication") {
  auto r2 = build_ring(2);
  CHECK(lam(*r2, Variant::compact, {1, 1}) == lam(*r2, Variant::compact, {2}, 2));
  for (int g = 1; g <= 6; ++g) {
    auto r = shared_ring(g);
    CHECK(lam(*r, Variant::compact, {g, g}).is_zero());
    std::mt19937 rng(17u + static_cast<unsigned>(g));
    for (int t = 0; t < 5; ++t) {
      TautClass x = random_class(*r, Variant::compact, rng);
      CHECK(r->mul(TautClass::unit(g, Variant::compact), x) == x);
    }
  }
  // lambda_3^2 at g = 4 via the square rule: 2 l2 l4 - 2 l1 l5 + 2 l6 with l5 = l6 = 0.
  auto r4 = build_ring(4);
  CHECK(lam(*r4, Variant::compact, {3, 3}) == lam(*r4, Variant::compact, {2, 4}, 2));
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937 rng(2024);
  for (int g = 2; g <= 6; ++g) {
    auto r = shared_ring(g);
    for (Variant v : {Variant::compact, Variant::open}) {
      for (int t = 0; t < 4; ++t) {
        TautClass a = random_class(*r, v, rng), b = random_class(*r, v, rng), c = random_class(*r, v, rng);
        CHECK(r->mul(a, b) == r->mul(b, a));
        CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
        CHECK(r->mul(a, b + c) == r->mul(a, b) + r->mul(a, c));
      }
    }
  }
}

TEST_CASE("products agree with the row-reduction oracle") {
  std::mt19937 rng(99);
  for (int g = 2; g <= 5; ++g) {
    auto r = shared_ring(g);
    oracle::OracleRing orc(g);
    for (int t = 0; t < 10; ++t) {
      Polynomial p(g);
      std::uniform_int_distribution<int> ex(0, 2);
      for (int term = 0; term < 3; ++term) {
        Exponents e(static_cast<std::size_t>(g));
        for (auto& x : e)
          x = ex(rng);
        p.add_term(e, Rational(1 + term, 1 + t));
      }
      auto res = orc.normal_form(p);
      CHECK(r->reduce(p, Variant::compact) == res.value);
    }
  }
}

TEST_CASE("degree of the Lagrangian Grassmannian") {
  // int x_1^N on LG(g) = 2^{N-g} times the number of standard shifted
  // tableaux of staircase shape (g, g-1, ..., 1).
  std::map<std::vector<int>, long> memo;
  for (int g = 1; g <= 7; ++g) {
    auto r = shared_ring(g);
    int n = g * (g + 1) / 2;
    TautClass x = r->pow(TautClass::generator(g, Variant::lagrangian, 1), n);
    std::vector<int> stair;
    for (int i = g; i >= 1; --i)
      stair.push_back(i);
    Rational expected = pow2(n - g) * shifted_tableaux(stair, memo);
    CHECK(r->integrate_lg(x) == expected);
  }
}

TEST_CASE("integration") {
  auto r2 = build_ring(2);
  CHECK(r2->integrate_lg(lam(*r2, Variant::lagrangian, {1, 2})) == 1);
  CHECK(r2->integrate_lg(lam(*r2, Variant::lagrangian, {1, 1, 2})) == 0);
  CHECK(r2->integrate_lg(lam(*r2, Variant::lagrangian, {1})) == 0);
  CHECK(r2->integrate_abar(lam(*r2, Variant::compact, {1, 2})) == Rational(1, 5760));
  CHECK(r2->integrate_open(lam(*r2, Variant::open, {1})) == Rational(1, 5760));
  auto r1 = build_ring(1);
  CHECK(r1->integrate_abar(lam(*r1, Variant::compact, {1})) == Rational(1, 24));
  for (int g = 1; g <= 7; ++g) {
    auto r = shared_ring(g);
    TautClass full = TautClass::monomial(g, Variant::compact, SquareFreeMonomial::full(g));
    CHECK(r->integrate_abar(full) == gamma_g(g));
    TautClass socle = TautClass::monomial(g, Variant::open, SquareFreeMonomial::full(g - 1));
    CHECK(r->integrate_open(socle) == gamma_g(g));
  }
  CHECK_THROWS_AS(r2->integrate_lg(lam(*r2, Variant::open, {1})), std::invalid_argument);
  CHECK_THROWS_AS(r2->integrate_abar(lam(*r2, Variant::lagrangian, {1})), std::invalid_argument);
}

TEST_CASE("restriction to the open part") {
  auto r3 = build_ring(3);
  TautClass a = lam(*r3, Variant::compact, {1}) + lam(*r3, Variant::compact, {2, 3}, 3);
  CHECK(r3->restrict_open(a) == lam(*r3, Variant::open, {1}));
  CHECK(r3->restrict_open(TautClass::generator(3, Variant::compact, 3)).is_zero());
  CHECK(r3->restrict_open(TautClass::unit(3, Variant::compact)) == TautClass::unit(3, Variant::open));
  // Restriction is a ring map.
  std::mt19937 rng(5);
  auto r5 = shared_ring(5);
  for (int t = 0; t < 5; ++t) {
    TautClass x = random_class(*r5, Variant::compact, rng), y = random_class(*r5, Variant::compact, rng);
    CHECK(r5->restrict_open(r5->mul(x, y)) == r5->mul(r5->restrict_open(x), r5->restrict_open(y)));
  }
}

TEST_CASE("class rendering and validation") {
  TautClass c(4, Variant::open);
  c.add_term(SquareFreeMonomial::from_indices({2, 3}), 420);
  c.add_term(SquareFreeMonomial::from_indices({1}), Rational(-1, 2));
  CHECK(render(c) == "-1/2 * l1 + 420 * l3*l2");
  CHECK(render(TautClass(2, Variant::compact)) == "0");
  CHECK(render(TautClass::unit(2, Variant::compact)) == "1");
  CHECK_THROWS(c.add_term(SquareFreeMonomial::from_indices({4}), 1));
  CHECK_THROWS_AS(parse_variant("abar"), ValidationError);
  CHECK(TautClass::generator(3, Variant::compact, 0) == TautClass::unit(3, Variant::compact));
  CHECK(TautClass::generator(3, Variant::compact, 4).is_zero());
  CHECK(TautClass::generator(3, Variant::open, 3).is_zero());
}
