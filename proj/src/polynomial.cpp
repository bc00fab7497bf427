#include "taut/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace taut {

int weighted_degree(const Exponents& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    d += static_cast<int>(i + 1) * e[i];
  return d;
}

Polynomial Polynomial::generator(int num_vars, int k) {
  Polynomial p(num_vars);
  if (k == 0) {
    p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), 1);
  } else if (k >= 1 && k <= num_vars) {
    Exponents e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(k - 1)] = 1;
    p.add_term(e, 1);
  }
  return p;
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw std::invalid_argument("Polynomial: exponent vector has wrong length");
  Rational v = c;
  v.canonicalize(); // mpq_class(p, q) does not reduce on its own
  if (v == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0)
    terms_.clear();
  for (auto& [e, c] : terms_)
    c *= s;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial out(num_vars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : other.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial mumford_graded_relation(int g, int k) {
  if (g < 1 || k < 1 || k > g)
    throw std::out_of_range("mumford_graded_relation: need 1 <= k <= g");
  Polynomial p(g);
  for (int i = 0; i <= 2 * k; ++i) {
    int j = 2 * k - i;
    if (i > g || j > g)
      continue;
    Polynomial term = Polynomial::generator(g, i) * Polynomial::generator(g, j);
    term *= Rational(j % 2 == 0 ? 1 : -1);
    p += term;
  }
  return p;
}

std::string render(const Polynomial& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (std::size_t i = e.size(); i-- > 0;) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += 'l' + std::to_string(i + 1);
      if (e[i] > 1)
        mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + '*' + mono;
  }
  return out;
}

} // namespace taut
