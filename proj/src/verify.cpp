#include "taut/verify.hpp"

#include "taut/arith.hpp"
#include "taut/errors.hpp"
#include "taut/oracle.hpp"
#include "taut/projection.hpp"
#include "taut/realmult.hpp"
#include "taut/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace taut {

void Report::add(std::string group, std::string label, bool pass, std::string detail) {
  checks.push_back({std::move(group), std::move(label), pass, std::move(detail)});
}

void Report::merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Table Report::table() const {
  Table t{{"group", "check", "result", "detail"}, {}};
  for (auto& c : checks)
    t.add({Cell::str(c.group), Cell::str(c.label), Cell::str(c.pass ? "pass" : "FAIL"), Cell::str(c.detail)});
  return t;
}

namespace {

std::shared_ptr<const RingContext> ring_for(int g) {
  return shared_ring(g, RingOptions{.allow_large = g > kDefaultGenusCap});
}

std::string gs(int g) { return "g=" + std::to_string(g); }

std::string mismatch(const TautClass& got, const TautClass& want) {
  return got == want ? render(got) : render(got) + " != " + render(want);
}

TautClass lambda_product(const RingContext& ring, Variant v, int from, int to) {
  TautClass out = TautClass::unit(ring.genus(), v);
  for (int i = from; i >= to; --i)
    out = ring.mul_generator(i, out);
  return out;
}

} // namespace

Report verify_thm15(int g) {
  auto ring = ring_for(g);
  const int top = top_degree(g, Variant::lagrangian);
  Report r;
  for (auto& p : compositions(g)) {
    TautClass schur = schur_det(alpha_vector(p), *ring, Variant::lagrangian);
    std::size_t n = 0, bad = 0;
    std::string first;
    for (auto m : ring->basis(top - p.codim(), Variant::lagrangian)) {
      TautClass P = TautClass::monomial(g, Variant::lagrangian, m);
      Rational lhs = ring->integrate_lg(ring->mul(schur, P));
      Rational rhs = product_integral(split_pullback(P, p, *ring));
      ++n;
      if (lhs != rhs && bad++ == 0)
        first = render(m) + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
    r.add("thm15", gs(g) + " " + p.to_string(), bad == 0,
          bad == 0 ? std::to_string(n) + " monomials" : std::to_string(bad) + " failures, first " + first);
  }
  return r;
}

Report verify_thm16(int g) {
  auto ring = ring_for(g);
  Report r;
  std::map<std::vector<int>, std::pair<TautClass, TautClass>> by_multiset;
  for (auto& p : compositions(g)) {
    const int l = p.length();
    TautClass lhs = ring->restrict_open(schur_det(alpha_vector(p), *ring, Variant::compact));
    TautClass rhs = ring->mul(lambda_product(*ring, Variant::open, g - 1, g - l + 1),
                              schur_det(beta_vector(p), *ring, Variant::open));
    r.add("thm16", gs(g) + " " + p.to_string() + " determinant", lhs == rhs, mismatch(lhs, rhs));

    TautClass open = product_projection_open(p, *ring);
    TautClass cpt = product_projection_cpt(p, *ring);
    TautClass restricted = ring->restrict_open(cpt);
    r.add("thm16", gs(g) + " " + p.to_string() + " projection", open == restricted, mismatch(open, restricted));

    auto key = p.parts();
    std::sort(key.begin(), key.end());
    auto [it, fresh] = by_multiset.try_emplace(key, cpt, open);
    if (!fresh) {
      bool same = it->second.first == cpt && it->second.second == open;
      r.add("thm16", gs(g) + " " + p.to_string() + " ordering", same,
            same ? "matches " + ProductPartition(key).to_string() : "differs from " + ProductPartition(key).to_string());
    }
  }
  return r;
}

Report verify_relations(int g) {
  auto ring = ring_for(g);
  Report r;
  for (int j = 1; j <= g - 1; ++j) {
    TautClass x = ring->mul_generator(j, ring->mul_generator(j, lambda_product(*ring, Variant::open, g - 1, j + 1)));
    r.add("relations", gs(g) + " j=" + std::to_string(j), x.is_zero(), render(x));
  }
  return r;
}

Report verify_annihilators(int g, int lmax) {
  auto ring = ring_for(g);
  const int top = top_degree(g, Variant::open);
  Report r;
  for (int l = 2; l <= std::min(lmax, g); ++l) {
    std::vector<TautClass> gens;
    for (int i = g - 1; i >= g - l + 1; --i)
      gens.push_back(TautClass::generator(g, Variant::open, i));
    TautClass h = lambda_product(*ring, Variant::open, g - 1, g - l + 1);
    std::map<int, std::vector<TautClass>> ann;
    for (auto& z : annihilator(gens, *ring, Variant::open))
      ann[z.terms().begin()->first.degree()].push_back(z);
    bool ok = true;
    std::string detail;
    for (int d = 0; d <= top; ++d) {
      auto& a = ann[d];
      auto ideal = ideal_span(h, d, *ring);
      auto both = a;
      both.insert(both.end(), ideal.begin(), ideal.end());
      std::size_t ra = span_rank(a), ri = span_rank(ideal), rb = span_rank(both);
      if (ra != ri || rb != ra) {
        ok = false;
        detail += "d=" + std::to_string(d) + " ann " + std::to_string(ra) + " ideal " + std::to_string(ri) + "; ";
      }
    }
    if (ok)
      detail = "equal in all " + std::to_string(top + 1) + " degrees";
    r.add("annihilator", gs(g) + " l=" + std::to_string(l), ok, detail);
  }
  return r;
}

Report verify_gorenstein(int g) {
  auto ring = ring_for(g);
  Report r;
  for (Variant v : {Variant::compact, Variant::open}) {
    const int top = top_degree(g, v);
    std::string zero;
    for (int k = 0; k <= top; ++k)
      if (determinant(gram_matrix(*ring, k, v)) == 0)
        zero += std::to_string(k) + " ";
    r.add("gorenstein", gs(g) + " " + std::string(variant_name(v)), zero.empty(),
          zero.empty() ? "degrees 0.." + std::to_string(top) + " nonsingular" : "singular in degrees " + zero);
  }
  return r;
}

Report verify_idempotence(int g) {
  auto ring = ring_for(g);
  Report r;
  for (Variant v : {Variant::compact, Variant::open}) {
    std::size_t n = 0;
    std::string bad;
    for (int k = 0; k <= top_degree(g, v); ++k)
      for (auto m : ring->basis(k, v)) {
        TautClass t = TautClass::monomial(g, v, m);
        ++n;
        if (project(pairing_of(t, k, *ring), *ring) != t)
          bad += render(m) + " ";
      }
    r.add("idempotence", gs(g) + " " + std::string(variant_name(v)), bad.empty(),
          bad.empty() ? std::to_string(n) + " basis classes" : "fails on " + bad);
  }
  return r;
}

Report verify_oracle(int g) {
  auto ring = ring_for(g);
  Report r;
  auto cmp = oracle::oracle_compare(*ring);
  std::string detail = std::to_string(cmp.checked) + " table entries";
  if (!cmp.ok()) {
    auto& m = cmp.mismatches.front();
    detail = std::to_string(cmp.mismatches.size()) + " mismatches, first l" + std::to_string(m.generator) + "*" +
             render(m.monomial) + ": " + m.table_value + " vs " + m.oracle_value;
  }
  r.add("oracle", gs(g) + " tables", cmp.ok(), detail);

  oracle::OracleRing orc(g);
  auto dims = ring->dimensions(Variant::compact);
  std::string bad;
  for (int d = 0; d <= top_degree(g, Variant::compact); ++d) {
    const auto& s = orc.slice(d);
    bool ok = s.monomials().size() - s.rank() == s.square_free_count() &&
              static_cast<long>(s.square_free_count()) == dims[static_cast<std::size_t>(d)] &&
              s.projection_kills_relations();
    if (!ok)
      bad += std::to_string(d) + " ";
  }
  r.add("oracle", gs(g) + " slices", bad.empty(), bad.empty() ? "quotient dimensions match" : "bad degrees " + bad);
  return r;
}

Report verify_examples(int gmax) {
  Report r;
  auto check = [&](const std::string& group, const std::string& label, const TautClass& got, const TautClass& want) {
    r.add(group, label, got == want, mismatch(got, want));
  };
  auto lam = [](const RingContext& ring, Variant v, std::vector<int> idx, Rational c) {
    TautClass out = TautClass::unit(ring.genus(), v);
    for (int i : idx)
      out = ring.mul_generator(i, out);
    return c * out;
  };

  if (gmax >= 4) {
    auto r4 = ring_for(4);
    check("values", "g=4 (1,1,2) open", product_projection_open(ProductPartition({1, 1, 2}), *r4),
          lam(*r4, Variant::open, {3, 2}, 420));
    check("values", "g=4 (1,1,1,1) open", product_projection_open(ProductPartition({1, 1, 1, 1}), *r4),
          lam(*r4, Variant::open, {3, 2, 1}, 4200));
    check("values", "g=4 (2,2) open", product_projection_open(ProductPartition({2, 2}), *r4),
          lam(*r4, Variant::open, {3, 1}, 42));
  }
  if (gmax >= 6) {
    auto r6 = ring_for(6);
    check("values", "g=6 (1,5) open", product_projection_open(ProductPartition({1, 5}), *r6),
          lam(*r6, Variant::open, {5}, Rational(2730, 691)));
  }
  if (gmax >= 2) {
    auto r2 = ring_for(2);
    TautClass want = lam(*r2, Variant::open, {1}, 10);
    ProductPartition p({1, 1});
    check("a1xa1", "closed form", closed_form::a1_ag1(2, *r2), want);
    check("a1xa1", "determinant", product_projection_open(p, *r2), want);
    check("a1xa1", "project", project(product_pairing(p, *r2, Variant::open), *r2), want);
    check("a1xa1", "project cpt", project(product_pairing(p, *r2, Variant::compact), *r2),
          product_projection_cpt(p, *r2));
  }

  for (int g = 1; g <= gmax; ++g) {
    auto ring = ring_for(g);
    const std::string G = gs(g);
    using P = ProductPartition;
    check("trivial", G + " (g)", product_projection_open(P({g}), *ring), TautClass::unit(g, Variant::open));
    if (g >= 2) {
      check("closed", G + " (1,g-1)", product_projection_open(P({1, g - 1}), *ring), closed_form::a1_ag1(g, *ring));
      check("closed", G + " cpt (1,g-1)", product_projection_cpt(P({1, g - 1}), *ring),
            closed_form::cpt_a1_ag1(g, *ring));
    }
    if (g >= 3) {
      check("closed", G + " (2,g-2)", product_projection_open(P({2, g - 2}), *ring), closed_form::a2_ag2(g, *ring));
      check("closed", G + " cpt (2,g-2)", product_projection_cpt(P({2, g - 2}), *ring),
            closed_form::cpt_a2_ag2(g, *ring));
      check("closed", G + " cpt (1,1,g-2)", product_projection_cpt(P({1, 1, g - 2}), *ring),
            closed_form::cpt_a1_a1_ag2(g, *ring));
    }
    if (g >= 4) {
      check("closed", G + " (3,g-3)", product_projection_open(P({3, g - 3}), *ring), closed_form::a3_ag3(g, *ring));
      check("closed", G + " (1,2,g-3)", product_projection_open(P({1, 2, g - 3}), *ring),
            closed_form::a1_a2_ag3(g, *ring));
    }
    for (int k = 1; k <= g - 1; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(k), 1);
      parts.push_back(g - k);
      check("closed", G + " (1^" + std::to_string(k) + ",g-k)", product_projection_open(P(parts), *ring),
            closed_form::a1k_agk(g, k, *ring));
    }
    check("closed", G + " (1^g)", product_projection_open(P(std::vector<int>(static_cast<std::size_t>(g), 1)), *ring),
          closed_form::a1_all(g, *ring));

    // Two-factor determinant and its transpose.
    for (int g1 = 1; g1 < g; ++g1) {
      int g2 = g - g1;
      Rational pre = gamma_g(g1) * gamma_g(g2) / gamma_g(g);
      TautClass d1 = pre * schur_det(std::vector<int>(static_cast<std::size_t>(g1), g2), *ring, Variant::compact);
      TautClass d2 = pre * schur_det(std::vector<int>(static_cast<std::size_t>(g2), g1), *ring, Variant::compact);
      TautClass proj = product_projection_cpt(P({g1, g2}), *ring);
      check("two-factor", G + " (" + std::to_string(g1) + "," + std::to_string(g2) + ")", proj, d1);
      check("two-factor", G + " (" + std::to_string(g1) + "," + std::to_string(g2) + ") transposed", d2, d1);
    }
    // (1^k, g-k) as a k x k determinant with rows lambda_{g-2i+j}.
    for (int k = 1; k <= g - 1; ++k) {
      std::vector<int> v, parts(static_cast<std::size_t>(k), 1);
      for (int i = 1; i <= k; ++i)
        v.push_back(g - i);
      parts.push_back(g - k);
      Rational pre = pow2(0);
      for (int i = 0; i < k; ++i)
        pre *= gamma_g(1);
      pre *= gamma_g(g - k) / gamma_g(g);
      check("ones", G + " k=" + std::to_string(k), product_projection_cpt(P(parts), *ring),
            pre * schur_det(v, *ring, Variant::compact));
    }
  }

  r.add("gamma", "gamma_1", gamma_g(1) == Rational(1, 24), to_string(gamma_g(1)));
  r.add("gamma", "gamma_2", gamma_g(2) == Rational(1, 5760), to_string(gamma_g(2)));
  r.add("gamma", "gamma_3", gamma_g(3) == Rational(1, 2903040), to_string(gamma_g(3)));
  r.add("gamma", "gamma_4", gamma_g(4) == Rational(1, 1393459200), to_string(gamma_g(4)));
  for (int g = 1; g <= 12; ++g) {
    Rational z = 1;
    for (int i = 1; i <= g; ++i)
      z *= abs(zeta_neg(i)) / 2;
    r.add("gamma", "zeta form " + gs(g), z == gamma_g(g), to_string(gamma_g(g)));
  }
  return r;
}

Report verify_appendix(int gmax) {
  Report r;
  for (int m = 1; m <= std::min(gmax, 4); ++m) {
    auto ring = ring_for(m);
    TautClass got = sym2_euler(m, *ring);
    TautClass want = TautClass::monomial(m, Variant::compact, SquareFreeMonomial::full(m), pow2(m));
    r.add("sym2", "m=" + std::to_string(m), got == want, mismatch(got, want));
  }
  for (int g = 1; g <= std::min(gmax, 6); ++g)
    for (int e = 1; e <= g; ++e) {
      if (g % e != 0)
        continue;
      auto c = euler_split_identity(g / e, e);
      r.add("euler-split", "m=" + std::to_string(g / e) + " e=" + std::to_string(e), c.pass, c.detail);
    }
  for (int m = 1; m <= gmax; ++m) {
    auto ring = ring_for(m);
    RMFieldData f;
    f.e = 1;
    f.m = m;
    for (int j = 1; j <= m; ++j)
      f.zeta_values.push_back(zeta_neg(j));
    auto cf = conjecture_f_class(f, *ring);
    bool ok = cf.constant == 1 && cf.cls == TautClass::unit(m, Variant::compact);
    r.add("conjecture-f", "e=1 m=" + std::to_string(m), ok, to_string(cf.constant) + " * " + render(cf.cls));
  }

  std::vector<std::pair<long, Rational>> siegel{{5, Rational(1, 30)}, {8, Rational(1, 12)}, {12, Rational(1, 6)}};
  for (auto& [d, want] : siegel) {
    Rational z = zeta_f_quadratic(d);
    r.add("siegel", "D=" + std::to_string(d), z == want, to_string(z));
  }

  std::vector<RMFieldData> fields;
  for (int m = 1; m <= 3; ++m) {
    RMFieldData f{1, m, {}, 1, {}};
    for (int j = 1; j <= m; ++j)
      f.zeta_values.push_back(zeta_neg(j));
    fields.push_back(f);
  }
  for (auto& [d, z] : siegel)
    fields.push_back(RMFieldData{2, 1, {z}, 1, d});
  fields.push_back(RMFieldData{3, 2, {Rational(-1, 21), Rational(5, 7)}, Rational(3, 2), {}});
  for (auto& f : fields) {
    std::string label = "e=" + std::to_string(f.e) + " m=" + std::to_string(f.m);
    if (f.quadratic_discriminant)
      label += " D=" + std::to_string(*f.quadratic_discriminant);
    try {
      Rational chi = chi_orb(f);
      r.add("chi-orb", label, true, to_string(chi));
    } catch (const std::logic_error& e) {
      r.add("chi-orb", label, false, e.what());
    }
  }
  return r;
}

namespace {

struct SuiteSpec {
  int default_gmax;
  std::function<Report(int)> per_genus;
  bool cumulative; // true: called once with gmax
};

const std::map<std::string, SuiteSpec, std::less<>>& suites() {
  static const std::map<std::string, SuiteSpec, std::less<>> table{
      {"oracle", {6, verify_oracle, false}},
      {"thm15", {5, verify_thm15, false}},
      {"thm16", {6, verify_thm16, false}},
      {"algebra", {6,
                   [](int g) {
                     Report r = verify_relations(g);
                     r.merge(verify_annihilators(g));
                     return r;
                   },
                   false}},
      {"gorenstein", {7,
                      [](int g) {
                        Report r = verify_gorenstein(g);
                        r.merge(verify_idempotence(g));
                        return r;
                      },
                      false}},
      {"examples", {8, verify_examples, true}},
      {"appendix", {6, verify_appendix, true}},
  };
  return table;
}

const SuiteSpec& find_suite(std::string_view name) {
  auto it = suites().find(name);
  if (it == suites().end())
    throw ValidationError("unknown suite: " + std::string(name));
  return it->second;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "thm15", "thm16", "algebra", "gorenstein", "examples", "appendix"};
  return names;
}

int suite_default_gmax(std::string_view suite) { return find_suite(suite).default_gmax; }

Report run_suite(std::string_view suite, int gmax) {
  const SuiteSpec& s = find_suite(suite);
  if (gmax < 1)
    throw ValidationError("gmax must be positive");
  if (s.cumulative)
    return s.per_genus(gmax);
  Report r;
  for (int g = 1; g <= gmax; ++g)
    r.merge(s.per_genus(g));
  return r;
}

} // namespace taut
