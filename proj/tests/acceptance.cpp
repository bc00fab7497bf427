// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include "taut/arith.hpp"
#include "taut/cli.hpp"
#include "taut/oracle.hpp"
#include "taut/projection.hpp"
#include "taut/realmult.hpp"
#include "taut/ring.hpp"
#include "taut/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace taut;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass)
        note = what;
      pass = false;
    }
  }
};

TautClass lam(const RingContext& r, Variant v, std::vector<int> idx, Rational c = 1) {
  TautClass out = TautClass::unit(r.genus(), v);
  for (int i : idx)
    out = r.mul_generator(i, out);
  return c * out;
}

// Bernoulli numbers by Akiyama-Tanigawa, independent of the library table.
Rational bern_abs(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
  }
  return abs(a[0]);
}

Rational zeta_product(const RMFieldData& f) {
  Rational p = 1;
  for (auto& z : f.zeta_values)
    p *= z;
  return p;
}

void report_suite(Outcome& o, const Report& r, const std::string& what) {
  for (auto& c : r.checks)
    o.require(c.pass, what + ": " + c.label + " " + c.detail);
  o.require(!r.checks.empty(), what + ": no checks ran");
}

Outcome ac1() {
  Outcome o;
  auto cli_out = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  auto a = cli_out({"project-product", "--g", "4", "--parts", "1,1,2", "--space", "open"});
  auto b = cli_out({"project-product", "--g", "4", "--parts", "1,1,1,1", "--space", "open"});
  o.require(a.first == 0 && a.second == "420 * l3*l2\n", "(1,1,2) printed " + a.second);
  o.require(b.first == 0 && b.second == "4200 * l3*l2*l1\n", "(1,1,1,1) printed " + b.second);
  auto r = shared_ring(4);
  o.require(product_projection_open(ProductPartition({1, 1, 2}), *r) == lam(*r, Variant::open, {3, 2}, 420),
            "(1,1,2) class");
  o.require(product_projection_open(ProductPartition({1, 1, 1, 1}), *r) == lam(*r, Variant::open, {3, 2, 1}, 4200),
            "(1,1,1,1) class");
  return o;
}

Outcome ac2() {
  Outcome o;
  std::size_t n = 0;
  for (int g = 2; g <= 8; ++g) {
    auto r = shared_ring(g);
    const Variant V = Variant::open;
    auto B = [](int k) { return bern_abs(k); };
    auto expect = [&](std::vector<int> parts, const TautClass& want) {
      ++n;
      TautClass got = product_projection_open(ProductPartition(parts), *r);
      o.require(got == want, "g=" + std::to_string(g) + " " + ProductPartition(parts).to_string() + ": " +
                                 render(got) + " vs " + render(want));
    };
    expect({1, g - 1}, lam(*r, V, {g - 1}, Rational(g) / (6 * B(2 * g))));
    if (g >= 3)
      expect({2, g - 2}, lam(*r, V, {g - 1, g - 3}, Rational(g * (g - 1)) / 360 / (B(2 * g) * B(2 * g - 2))));
    if (g >= 4) {
      Rational c3 = Rational(g * (g - 1) * (g - 2)) / 45360 / (B(2 * g) * B(2 * g - 2) * B(2 * g - 4));
      TautClass shape = lam(*r, V, {g - 1, g - 4, g - 4}) - lam(*r, V, {g - 1, g - 3, g - 5});
      expect({3, g - 3}, c3 * shape);
      Rational c12 = Rational(g * (g - 1) * (g - 2)) / 2160 / (B(2 * g) * B(2 * g - 2) * B(2 * g - 4));
      expect({1, 2, g - 3}, lam(*r, V, {g - 1, g - 2, g - 4}, c12));
    }
    for (int k = 1; k <= g - 1; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(k), 1), idx;
      parts.push_back(g - k);
      Rational c = 1;
      for (int i = g - k + 1; i <= g; ++i)
        c *= Rational(i) / (6 * B(2 * i));
      for (int i = g - 1; i >= g - k; --i)
        idx.push_back(i);
      expect(parts, lam(*r, V, idx, c));
    }
  }
  o.note = o.pass ? std::to_string(n) + " closed forms" : o.note;
  return o;
}

Outcome ac3() {
  Outcome o;
  o.require(gamma_g(1) == Rational(1, 24), "gamma_1");
  o.require(gamma_g(2) == Rational(1, 5760), "gamma_2");
  for (int g = 1; g <= 12; ++g) {
    Rational product = 1, zeta = 1;
    for (int i = 1; i <= g; ++i) {
      product *= bern_abs(2 * i) / (4 * i);
      zeta *= zeta_neg(i);
    }
    long e = static_cast<long>(g) * (g + 1) / 2;
    zeta *= (e % 2 ? -1 : 1) * pow2(-g);
    o.require(gamma_g(g) == product && product == zeta, "gamma_" + std::to_string(g));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int g = 1; g <= 8; ++g) {
    auto r = shared_ring(g);
    std::vector<long> expect{1};
    for (int i = 1; i <= g; ++i) {
      std::vector<long> next(expect.size() + static_cast<std::size_t>(i), 0);
      for (std::size_t d = 0; d < expect.size(); ++d) {
        next[d] += expect[d];
        next[d + static_cast<std::size_t>(i)] += expect[d];
      }
      expect = next;
    }
    o.require(r->total_dimension(Variant::compact) == (std::size_t{1} << g), "basis size g=" + std::to_string(g));
    o.require(r->dimensions(Variant::compact) == expect, "graded dimensions g=" + std::to_string(g));
  }
  for (int g = 1; g <= 6; ++g) {
    auto rep = oracle::oracle_compare(*shared_ring(g));
    o.require(rep.ok() && rep.checked == (static_cast<std::size_t>(g) << g), "oracle g=" + std::to_string(g));
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (int g = 1; g <= 7; ++g) {
    auto r = shared_ring(g);
    for (Variant v : {Variant::compact, Variant::open})
      for (int k = 0; k <= top_degree(g, v); ++k)
        o.require(determinant(gram_matrix(*r, k, v)) != 0,
                  "g=" + std::to_string(g) + " " + std::string(variant_name(v)) + " k=" + std::to_string(k));
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int g = 1; g <= 5; ++g) {
    Report r = verify_thm15(g);
    report_suite(o, r, "g=" + std::to_string(g));
    o.require(r.checks.size() == compositions(g).size(), "partition count g=" + std::to_string(g));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (int g = 1; g <= 6; ++g)
    report_suite(o, verify_thm16(g), "g=" + std::to_string(g));
  return o;
}

Outcome ac8() {
  Outcome o;
  for (int g = 1; g <= 7; ++g) {
    auto r = shared_ring(g);
    for (int j = 1; j <= g - 1; ++j) {
      std::vector<int> idx{j, j};
      for (int i = j + 1; i <= g - 1; ++i)
        idx.push_back(i);
      o.require(lam(*r, Variant::open, idx).is_zero(), "relation g=" + std::to_string(g) + " j=" + std::to_string(j));
    }
  }
  for (int g = 2; g <= 6; ++g)
    report_suite(o, verify_annihilators(g, 4), "annihilator g=" + std::to_string(g));
  return o;
}

Outcome ac9() {
  Outcome o;
  auto r = shared_ring(2);
  PairingFunctional f{2, Variant::open, 1, {{SquareFreeMonomial(), gamma_g(1) * gamma_g(1)}}};
  o.require(f.values.begin()->second == Rational(1, 576), "f(1) = 1/576");
  TautClass ten = lam(*r, Variant::open, {1}, 10);
  o.require(project(f, *r) == ten, "project gives " + render(project(f, *r)));
  o.require(Rational(2) / (6 * bern_abs(4)) == 10, "closed formula at g=2");
  o.require(project(product_pairing(ProductPartition({1, 1}), *r, Variant::open), *r) == ten, "derived functional");
  for (int g = 1; g <= 5; ++g)
    report_suite(o, verify_idempotence(g), "idempotence");
  return o;
}

Outcome ac10() {
  Outcome o;
  for (int m = 1; m <= 4; ++m)
    o.require(sym2_euler(m, *shared_ring(m)) ==
                  TautClass::monomial(m, Variant::compact, SquareFreeMonomial::full(m), pow2(m)),
              "sym2 m=" + std::to_string(m));
  for (int g = 1; g <= 6; ++g)
    for (int e = 1; e <= g; ++e)
      if (g % e == 0)
        o.require(euler_split_identity(g / e, e).pass, "split m=" + std::to_string(g / e) + " e=" + std::to_string(e));
  for (int m = 1; m <= 6; ++m) {
    RMFieldData f{1, m, {}, 1, {}};
    for (int j = 1; j <= m; ++j)
      f.zeta_values.push_back(zeta_neg(j));
    auto cf = conjecture_f_class(f, *shared_ring(m));
    o.require(cf.constant == 1 && cf.cls == TautClass::unit(m, Variant::compact), "e=1 m=" + std::to_string(m));
    o.require(chi_orb(f) == zeta_product(f), "chi_orb e=1 m=" + std::to_string(m));
  }
  for (auto f : {RMFieldData{2, 1, {Rational(1, 30)}, 1, 5}, RMFieldData{2, 1, {Rational(1, 12)}, 1, 8},
                 RMFieldData{2, 2, {Rational(1, 30), Rational(1, 60)}, 2, {}},
                 RMFieldData{3, 2, {Rational(-1, 21), Rational(5, 7)}, 1, {}}}) {
    long sign_exp = static_cast<long>(f.e) * f.m * (f.m + 1) / 2;
    Rational chain = (sign_exp % 2 ? -1 : 1) * gamma_prime_f(f) * pow2(f.genus());
    o.require(chi_orb(f) == zeta_product(f) && chain == zeta_product(f), "chi_orb chain");
  }
  o.require(zeta_f_quadratic(5) == Rational(1, 30), "D=5");
  o.require(zeta_f_quadratic(8) == Rational(1, 12), "D=8");
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "genus-4 product loci: 420 l3*l2 and 4200 l3*l2*l1", 1, ac1},
      {"AC2", "closed-form product projections, g <= 8", 30, ac2},
      {"AC3", "gamma_g values and product/zeta agreement, g <= 12", 1, ac3},
      {"AC4", "basis sizes, graded dimensions, oracle agreement", 300, ac4},
      {"AC5", "Gram matrices nonsingular, g <= 7", 300, ac5},
      {"AC6", "Schur determinant against split integrals, g <= 5", 300, ac6},
      {"AC7", "open-part factorization of projections, g <= 6", 120, ac7},
      {"AC8", "vanishing relations and annihilator ideals", 300, ac8},
      {"AC9", "projection operator: A1xA1 and idempotence", 60, ac9},
      {"AC10", "real multiplication identities and constants", 60, ac10},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      out.pass = false;
      out.note = "over time budget";
    }
    failed += out.pass ? 0 : 1;
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << static_cast<long>(secs * 1000)
              << " ms)";
    if (!out.pass || !out.note.empty())
      std::cout << " -- " << out.note;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
