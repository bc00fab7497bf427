#include "taut/realmult.hpp"

#include "taut/arith.hpp"
#include "taut/errors.hpp"
#include "taut/projection.hpp"

#include <bit>
#include <stdexcept>

namespace taut {

void RMFieldData::validate() const {
  if (e < 1 || m < 1)
    throw ValidationError("field data needs e >= 1 and m >= 1");
  if (static_cast<int>(zeta_values.size()) != m)
    throw ValidationError("field data needs exactly m = " + std::to_string(m) + " zeta values, got " +
                          std::to_string(zeta_values.size()));
  if (quadratic_discriminant && e != 2)
    throw ValidationError("quadratic_discriminant given but e = " + std::to_string(e));
}

std::vector<int> schur_me_vector(int m, int e) {
  if (m < 1 || e < 1)
    throw std::invalid_argument("schur_me_vector: m and e must be positive");
  std::vector<int> v;
  for (int i = 1; i <= e; ++i)
    v.insert(v.end(), static_cast<std::size_t>(m), m * (e - i));
  return v;
}

TautClass schur_me(int m, int e, const RingContext& ring) {
  if (ring.genus() != m * e)
    throw std::invalid_argument("schur_me: ring genus must be m*e");
  return schur_det(schur_me_vector(m, e), ring, Variant::compact);
}

namespace {

Rational sign(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

Rational zeta_f_product(const RMFieldData& f) {
  Rational p = 1;
  for (auto& z : f.zeta_values)
    p *= z;
  return p;
}

} // namespace

Rational gamma_prime_f(const RMFieldData& f) {
  f.validate();
  long exponent = static_cast<long>(f.e) * f.m * (f.m + 1) / 2;
  return sign(exponent) * pow2(-f.genus()) * zeta_f_product(f);
}

Rational gamma_f(const RMFieldData& f) { return gamma_prime_f(f) * f.index; }

Rational conjecture_f_constant(const RMFieldData& f) {
  f.validate();
  const long g = f.genus();
  Rational riemann = 1;
  for (int j = 1; j <= g; ++j)
    riemann *= zeta_neg(j);
  return sign(g * (g - f.m) / 2) * zeta_f_product(f) / riemann * f.index;
}

ConjectureF conjecture_f_class(const RMFieldData& f, const RingContext& ring) {
  Rational c = conjecture_f_constant(f);
  return {c, c * schur_me(f.m, f.e, ring)};
}

namespace {

using RootPoly = std::map<Exponents, Rational>;

void add_to(RootPoly& p, const Exponents& e, const Rational& c) {
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      p.erase(it);
  }
}

RootPoly multiply(const RootPoly& a, const RootPoly& b) {
  RootPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

RootPoly elementary(int m, int k) {
  RootPoly out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) != k)
      continue;
    Exponents e(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
      e[static_cast<std::size_t>(i)] = (s >> i) & 1u;
    add_to(out, e, 1);
  }
  return out;
}

} // namespace

Polynomial to_elementary(const std::map<Exponents, Rational>& roots_poly, int m) {
  std::vector<RootPoly> e_k;
  for (int k = 0; k <= m; ++k)
    e_k.push_back(elementary(m, k));
  RootPoly rest = roots_poly;
  Polynomial out(m);
  while (!rest.empty()) {
    auto [lead, c] = *rest.rbegin();
    for (std::size_t i = 1; i < lead.size(); ++i)
      if (lead[i] > lead[i - 1])
        throw std::invalid_argument("to_elementary: polynomial is not symmetric");
    Exponents lam(static_cast<std::size_t>(m), 0);
    RootPoly prod{{Exponents(static_cast<std::size_t>(m), 0), Rational(1)}};
    for (int k = 1; k <= m; ++k) {
      int next = k < m ? lead[static_cast<std::size_t>(k)] : 0;
      int power = lead[static_cast<std::size_t>(k - 1)] - next;
      lam[static_cast<std::size_t>(k - 1)] = power;
      for (int r = 0; r < power; ++r)
        prod = multiply(prod, e_k[static_cast<std::size_t>(k)]);
    }
    for (auto& [e, v] : prod)
      add_to(rest, e, -c * v);
    out.add_term(lam, c);
  }
  return out;
}

Polynomial sym2_euler_polynomial(int m) {
  if (m < 1)
    throw std::invalid_argument("sym2_euler: m must be >= 1");
  RootPoly p{{Exponents(static_cast<std::size_t>(m), 0), Rational(1)}};
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      RootPoly factor;
      Exponents ei(static_cast<std::size_t>(m), 0), ej(static_cast<std::size_t>(m), 0);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      add_to(factor, ei, 1);
      add_to(factor, ej, 1);
      p = multiply(p, factor);
    }
  return to_elementary(p, m);
}

TautClass sym2_euler(int m, const RingContext& ring) {
  if (m > 5)
    throw ResourceLimitError("sym2_euler is capped at m <= 5");
  if (ring.genus() != m)
    throw std::invalid_argument("sym2_euler: ring genus must equal m");
  return ring.reduce(sym2_euler_polynomial(m), Variant::compact);
}

IdentityCheck euler_split_identity(int m, int e) {
  int g = m * e;
  auto ring = shared_ring(g, RingOptions{.allow_large = true});
  TautClass a = TautClass::unit(g, Variant::compact);
  for (int i = 1; i <= m; ++i)
    a = ring->mul_generator(i * e, a);
  ProductPartition p(std::vector<int>(static_cast<std::size_t>(e), m));
  TensorClass lhs = split_pullback(a, p, *ring);
  TensorClass rhs(p.parts());
  rhs.add_term(TensorClass::Key(static_cast<std::size_t>(e), SquareFreeMonomial::full(m)), 1);
  IdentityCheck out;
  out.pass = lhs == rhs;
  out.detail = "m=" + std::to_string(m) + " e=" + std::to_string(e) + ": split integral " +
               to_string(product_integral(lhs)) + ", " + std::to_string(lhs.terms().size()) + " term(s)";
  return out;
}

Rational chi_orb(const RMFieldData& f) {
  f.validate();
  Rational chi = zeta_f_product(f);
  long exponent = static_cast<long>(f.e) * f.m * (f.m + 1) / 2;
  Rational chain = sign(exponent) * gamma_prime_f(f) * pow2(static_cast<long>(f.m) * f.e);
  if (chain != chi)
    throw std::logic_error("chi_orb: Euler characteristic chain mismatch (" + to_string(chain) + " vs " +
                           to_string(chi) + ")");
  return chi;
}

bool is_fundamental_discriminant(long d) {
  auto square_free = [](long n) {
    if (n < 0)
      n = -n;
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0)
        return false;
    return n != 0;
  };
  long r = ((d % 4) + 4) % 4;
  if (r == 1)
    return d != 1 && square_free(d);
  if (r == 0) {
    long n = d / 4;
    long rn = ((n % 4) + 4) % 4;
    return (rn == 2 || rn == 3) && square_free(n);
  }
  return false;
}

Rational zeta_f_quadratic(long discriminant) {
  if (discriminant <= 1 || !is_fundamental_discriminant(discriminant))
    throw ValidationError("not the discriminant of a real quadratic field: " + std::to_string(discriminant));
  auto sigma1 = [](long n) {
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        s += d;
        if (d != n / d)
          s += n / d;
      }
    return s;
  };
  Integer total = 0;
  long parity = discriminant % 2;
  for (long b = -discriminant; b <= discriminant; ++b) {
    if (b * b >= discriminant || ((b % 2) + 2) % 2 != parity)
      continue;
    total += sigma1((discriminant - b * b) / 4);
  }
  Rational z(total, 60);
  z.canonicalize();
  return z;
}

} // namespace taut
