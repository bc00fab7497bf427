#include "taut/projection.hpp"

#include "taut/arith.hpp"
#include "taut/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace taut {

// ---------------------------------------------------------------------------
// Partitions

ProductPartition::ProductPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("ProductPartition: needs at least one part");
  for (int x : parts_)
    if (x < 1)
      throw std::invalid_argument("ProductPartition: parts must be positive");
  genus_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

ProductPartition ProductPartition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty() || tok.size() > 3 || tok.find_first_not_of("0123456789") != std::string_view::npos)
      throw ValidationError("malformed partition '" + std::string(text) + "' (expected e.g. 1,1,2)");
    int v = std::stoi(std::string(tok));
    if (v < 1)
      throw ValidationError("partition parts must be positive: '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return ProductPartition(std::move(parts));
}

int ProductPartition::codim() const {
  int c = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      c += parts_[i] * parts_[j];
  return c;
}

std::string ProductPartition::to_string() const {
  std::string out;
  for (int x : parts_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::vector<ProductPartition> compositions(int g) {
  std::vector<ProductPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = 1; x <= remaining; ++x) {
      cur.push_back(x);
      self(self, remaining - x);
      cur.pop_back();
    }
  };
  if (g >= 1)
    rec(rec, g);
  return out;
}

namespace {

std::vector<int> block_vector(const std::vector<int>& block_sizes, int total) {
  std::vector<int> v;
  int used = 0;
  for (int size : block_sizes) {
    used += size;
    v.insert(v.end(), static_cast<std::size_t>(size), total - used);
  }
  return v;
}

} // namespace

std::vector<int> alpha_vector(const ProductPartition& p) { return block_vector(p.parts(), p.genus()); }

std::vector<int> beta_vector(const ProductPartition& p) {
  std::vector<int> reduced;
  for (int x : p.parts())
    reduced.push_back(x - 1);
  return block_vector(reduced, p.genus() - p.length());
}

// ---------------------------------------------------------------------------
// Schur determinants

TautClass schur_det(const std::vector<int>& v, const RingContext& ring, Variant variant) {
  const int n = static_cast<int>(v.size());
  const int g = ring.genus();
  if (n > 20)
    throw std::invalid_argument("schur_det: vector too long");
  // minor[S] = determinant of the rows n-|S|..n-1 restricted to the column
  // set S; expanded along its first row.
  std::vector<std::optional<TautClass>> minor(std::size_t{1} << n);
  minor[0] = TautClass::unit(g, variant);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int size = std::popcount(s);
    int row = n - size;
    TautClass acc(g, variant);
    int below = 0;
    for (int j = 0; j < n; ++j) {
      if (!((s >> j) & 1u))
        continue;
      int k = v[static_cast<std::size_t>(row)] - row + j;
      std::uint32_t rest = s & ~(1u << j);
      if (k >= 0 && k <= g && !minor[rest]->is_zero()) {
        TautClass term = ring.mul_generator(k, *minor[rest]);
        if (below % 2 == 1)
          term *= -1;
        acc += term;
      }
      ++below;
    }
    minor[s] = std::move(acc);
  }
  return *minor[(1u << n) - 1];
}

Rational product_prefactor(const ProductPartition& p) {
  Rational r = 1;
  for (int x : p.parts())
    r *= gamma_g(x);
  return r / gamma_g(p.genus());
}

namespace {

void require_genus(const ProductPartition& p, const RingContext& ring) {
  if (p.genus() != ring.genus())
    throw ValidationError("partition " + p.to_string() + " sums to " + std::to_string(p.genus()) +
                          ", expected genus " + std::to_string(ring.genus()));
}

// lambda_{g-1} lambda_{g-2} ... lambda_{g-l+1} in the open ring.
TautClass top_lambda_run(const RingContext& ring, int l) {
  int g = ring.genus();
  TautClass out = TautClass::unit(g, Variant::open);
  for (int i = 1; i <= l - 1; ++i)
    out = ring.mul_generator(g - i, out);
  return out;
}

} // namespace

TautClass product_projection_cpt(const ProductPartition& p, const RingContext& ring) {
  require_genus(p, ring);
  return product_prefactor(p) * schur_det(alpha_vector(p), ring, Variant::compact);
}

TautClass product_projection_open(const ProductPartition& p, const RingContext& ring) {
  require_genus(p, ring);
  TautClass det = schur_det(beta_vector(p), ring, Variant::open);
  return product_prefactor(p) * ring.mul(top_lambda_run(ring, p.length()), det);
}

// ---------------------------------------------------------------------------
// Tensor classes

TensorClass::TensorClass(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int g : factors_)
    if (g < 1)
      throw std::invalid_argument("TensorClass: factor genera must be positive");
}

TensorClass TensorClass::unit(std::vector<int> factors) {
  TensorClass t(std::move(factors));
  t.add_term(Key(t.factors_.size()), 1);
  return t;
}

void TensorClass::add_term(const Key& key, const Rational& c) {
  if (key.size() != factors_.size())
    throw std::invalid_argument("TensorClass: key length mismatch");
  for (std::size_t i = 0; i < key.size(); ++i)
    if (key[i].max_index() > factors_[i])
      throw std::invalid_argument("TensorClass: monomial invalid for factor genus");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

namespace {

std::vector<std::shared_ptr<const RingContext>> factor_rings(const std::vector<int>& factors) {
  std::vector<std::shared_ptr<const RingContext>> rings;
  for (int g : factors)
    rings.push_back(shared_ring(g, RingOptions{.allow_large = true}));
  return rings;
}

// Product of two square-free monomials in one factor ring.
TermMap monomial_product(const RingContext& ring, SquareFreeMonomial a, SquareFreeMonomial b) {
  TautClass x = TautClass::monomial(ring.genus(), Variant::compact, a);
  for (int i : b.indices())
    x = ring.mul_generator(i, x);
  return x.terms();
}

} // namespace

TensorClass tensor_mul(const TensorClass& a, const TensorClass& b) {
  if (a.factors() != b.factors())
    throw std::invalid_argument("tensor_mul: factor mismatch");
  auto rings = factor_rings(a.factors());
  TensorClass out(a.factors());
  const std::size_t l = a.factors().size();
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      std::vector<std::pair<TensorClass::Key, Rational>> partial{{TensorClass::Key{}, ca * cb}};
      for (std::size_t i = 0; i < l && !partial.empty(); ++i) {
        TermMap prod = monomial_product(*rings[i], ka[i], kb[i]);
        std::vector<std::pair<TensorClass::Key, Rational>> next;
        for (auto& [key, c] : partial)
          for (auto& [m, cm] : prod) {
            auto k2 = key;
            k2.push_back(m);
            next.emplace_back(std::move(k2), c * cm);
          }
        partial = std::move(next);
      }
      for (auto& [key, c] : partial)
        out.add_term(key, c);
    }
  return out;
}

TensorClass split_pullback(const TautClass& a, const ProductPartition& p, const RingContext& ring) {
  require_genus(p, ring);
  if (a.genus() != ring.genus())
    throw std::invalid_argument("split_pullback: class genus mismatch");
  if (a.variant() == Variant::open)
    throw std::invalid_argument("split_pullback: requires a compact or lagrangian class");
  const auto& parts = p.parts();
  const int g = p.genus();

  // images[k] = sum over (k_1..k_l), 0 <= k_i <= g_i, sum k_i = k.
  std::vector<TensorClass> images(static_cast<std::size_t>(g) + 1, TensorClass(parts));
  std::vector<int> split(parts.size(), 0);
  auto rec = [&](auto& self, std::size_t i, int total) -> void {
    if (i == parts.size()) {
      TensorClass::Key key;
      for (std::size_t j = 0; j < parts.size(); ++j)
        key.push_back(split[j] == 0 ? SquareFreeMonomial() : SquareFreeMonomial().with(split[j]));
      images[static_cast<std::size_t>(total)].add_term(key, 1);
      return;
    }
    for (int x = 0; x <= parts[i]; ++x) {
      split[i] = x;
      self(self, i + 1, total + x);
    }
  };
  rec(rec, 0, 0);

  TensorClass out(parts);
  for (auto& [m, c] : a.terms()) {
    TensorClass t = TensorClass::unit(parts);
    for (int i : m.indices())
      t = tensor_mul(t, images[static_cast<std::size_t>(i)]);
    for (auto& [key, v] : t.terms())
      out.add_term(key, c * v);
  }
  return out;
}

Rational product_integral(const TensorClass& t) {
  Rational total = 0;
  for (auto& [key, c] : t.terms()) {
    bool top = true;
    for (std::size_t i = 0; i < key.size() && top; ++i)
      top = key[i] == SquareFreeMonomial::full(t.factors()[i]);
    if (top)
      total += c;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Pairings and projection

namespace {

Rational pair(const RingContext& ring, const TautClass& a, const TautClass& b) {
  TautClass prod = ring.mul(a, b);
  switch (a.variant()) {
  case Variant::compact:
    return ring.integrate_abar(prod);
  case Variant::lagrangian:
    return ring.integrate_lg(prod);
  case Variant::open:
    return ring.integrate_open(prod);
  }
  return 0;
}

} // namespace

Matrix gram_matrix(const RingContext& ring, int k, Variant variant) {
  int top = top_degree(ring.genus(), variant);
  if (k < 0 || k > top)
    throw std::out_of_range("gram_matrix: degree out of range");
  auto rows = ring.basis(k, variant);
  auto cols = ring.basis(top - k, variant);
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = pair(ring, TautClass::monomial(ring.genus(), variant, rows[i]),
                     TautClass::monomial(ring.genus(), variant, cols[j]));
  return m;
}

std::vector<SquareFreeMonomial> complementary_basis(const RingContext& ring, Variant variant, int codim) {
  int top = top_degree(ring.genus(), variant);
  if (codim < 0 || codim > top)
    throw ValidationError("codimension " + std::to_string(codim) + " out of range 0.." + std::to_string(top));
  return ring.basis(top - codim, variant);
}

void validate(const PairingFunctional& f, const RingContext& ring) {
  if (f.genus != ring.genus())
    throw ValidationError("pairing functional genus " + std::to_string(f.genus) + " does not match ring genus " +
                          std::to_string(ring.genus()));
  auto expected = complementary_basis(ring, f.variant, f.codim);
  std::vector<std::string> missing, extra;
  for (auto m : expected)
    if (!f.values.count(m))
      missing.push_back(render(m));
  for (auto& [m, v] : f.values)
    if (std::find(expected.begin(), expected.end(), m) == expected.end())
      extra.push_back(render(m));
  if (missing.empty() && extra.empty())
    return;
  std::ostringstream msg;
  msg << "pairing functional (g=" << f.genus << ", " << variant_name(f.variant) << ", codim " << f.codim
      << ") does not match the complementary basis of degree " << top_degree(f.genus, f.variant) - f.codim;
  auto list = [&msg](const char* label, const std::vector<std::string>& xs) {
    if (xs.empty())
      return;
    msg << "; " << label << ":";
    for (auto& x : xs)
      msg << ' ' << x;
  };
  list("missing", missing);
  list("extra", extra);
  throw ValidationError(msg.str());
}

PairingFunctional pairing_of(const TautClass& t, int codim, const RingContext& ring) {
  for (auto& [m, c] : t.terms())
    if (m.degree() != codim)
      throw std::invalid_argument("pairing_of: class is not homogeneous of degree " + std::to_string(codim));
  PairingFunctional f{ring.genus(), t.variant(), codim, {}};
  for (auto m : complementary_basis(ring, t.variant(), codim))
    f.values[m] = pair(ring, t, TautClass::monomial(ring.genus(), t.variant(), m));
  return f;
}

PairingFunctional product_pairing(const ProductPartition& p, const RingContext& ring, Variant variant) {
  require_genus(p, ring);
  const int g = ring.genus();
  Rational scale = 1;
  if (variant != Variant::lagrangian)
    for (int x : p.parts())
      scale *= gamma_g(x);
  PairingFunctional f{g, variant, p.codim(), {}};
  for (auto m : complementary_basis(ring, variant, p.codim())) {
    TautClass delta = TautClass::monomial(g, Variant::compact, m);
    if (variant == Variant::open)
      delta = ring.mul_generator(g, delta);
    f.values[m] = scale * product_integral(split_pullback(delta, p, ring));
  }
  return f;
}

TautClass project(const PairingFunctional& f, const RingContext& ring) {
  validate(f, ring);
  auto basis = ring.basis(f.codim, f.variant);
  auto comp = complementary_basis(ring, f.variant, f.codim);
  Matrix gram = gram_matrix(ring, f.codim, f.variant);
  std::vector<Rational> rhs;
  for (auto m : comp)
    rhs.push_back(f.values.at(m));
  std::vector<Rational> x;
  try {
    x = solve(gram.transpose(), rhs);
  } catch (const std::domain_error&) {
    throw std::logic_error("singular Gram matrix in degree " + std::to_string(f.codim) + " (genus " +
                           std::to_string(f.genus) + "): Gorenstein pairing is degenerate");
  }
  TautClass out(ring.genus(), f.variant);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.add_term(basis[i], x[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Annihilators and ideals

std::vector<TautClass> annihilator(const std::vector<TautClass>& gens, const RingContext& ring, Variant variant) {
  const int g = ring.genus();
  std::vector<TautClass> out;
  for (int d = 0; d <= top_degree(g, variant); ++d) {
    auto basis = ring.basis(d, variant);
    // Output coordinates: (generator index, monomial) pairs hit by some product.
    std::map<std::pair<std::size_t, SquareFreeMonomial>, std::size_t> coord;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      TautClass x = TautClass::monomial(g, variant, basis[b]);
      for (std::size_t r = 0; r < gens.size(); ++r) {
        if (gens[r].variant() != variant)
          throw std::invalid_argument("annihilator: generator variant mismatch");
        TautClass prod = ring.mul(x, gens[r]);
        for (auto& [m, c] : prod.terms()) {
          auto [it, inserted] = coord.try_emplace({r, m}, coord.size());
          columns[b].emplace_back(it->second, c);
        }
      }
    }
    Matrix a(coord.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (auto& [row, c] : columns[b])
        a(row, b) = c;
    for (auto& v : nullspace(a)) {
      TautClass z(g, variant);
      for (std::size_t b = 0; b < basis.size(); ++b)
        z.add_term(basis[b], v[b]);
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::vector<TautClass> ideal_span(const TautClass& h, int degree, const RingContext& ring) {
  std::vector<TautClass> out;
  std::map<int, TautClass> parts;
  for (auto& [m, c] : h.terms())
    parts.try_emplace(m.degree(), ring.genus(), h.variant()).first->second.add_term(m, c);
  // For homogeneous h this is exactly {h * b : deg b = degree - deg h}.
  if (parts.size() > 1)
    throw std::invalid_argument("ideal_span: generator must be homogeneous");
  int hdeg = parts.empty() ? 0 : parts.begin()->first;
  if (degree < hdeg)
    return out;
  for (auto m : ring.basis(degree - hdeg, h.variant())) {
    TautClass prod = ring.mul(TautClass::monomial(ring.genus(), h.variant(), m), h);
    if (!prod.is_zero())
      out.push_back(std::move(prod));
  }
  return out;
}

std::size_t span_rank(const std::vector<TautClass>& classes) {
  std::map<SquareFreeMonomial, std::size_t> col;
  for (auto& c : classes)
    for (auto& [m, v] : c.terms())
      col.try_emplace(m, col.size());
  Matrix a(classes.size(), col.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto& [m, v] : classes[i].terms())
      a(i, col.at(m)) = v;
  return rank(a);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace closed_form {

namespace {

Rational absb(int n) { return abs(bernoulli(n)); }

TautClass lambdas(const RingContext& ring, Variant v, std::initializer_list<int> idx) {
  TautClass out = TautClass::unit(ring.genus(), v);
  for (int i : idx)
    out = ring.mul_generator(i, out);
  return out;
}

void need(bool ok, const char* what) {
  if (!ok)
    throw std::out_of_range(std::string("closed form out of range: ") + what);
}

} // namespace

TautClass a1_ag1(int g, const RingContext& ring) {
  need(g >= 2 && ring.genus() == g, "(1, g-1) needs g >= 2");
  return Rational(g) / (6 * absb(2 * g)) * lambdas(ring, Variant::open, {g - 1});
}

TautClass a2_ag2(int g, const RingContext& ring) {
  need(g >= 3 && ring.genus() == g, "(2, g-2) needs g >= 3");
  Rational c = Rational(1, 360) * g * (g - 1) / (absb(2 * g) * absb(2 * g - 2));
  return c * lambdas(ring, Variant::open, {g - 1, g - 3});
}

TautClass a3_ag3(int g, const RingContext& ring) {
  need(g >= 4 && ring.genus() == g, "(3, g-3) needs g >= 4");
  Rational c = Rational(1, 45360) * g * (g - 1) * (g - 2) / (absb(2 * g) * absb(2 * g - 2) * absb(2 * g - 4));
  TautClass inner = lambdas(ring, Variant::open, {g - 4, g - 4}) - lambdas(ring, Variant::open, {g - 3, g - 5});
  return c * ring.mul_generator(g - 1, inner);
}

TautClass a1_a2_ag3(int g, const RingContext& ring) {
  need(g >= 4 && ring.genus() == g, "(1, 2, g-3) needs g >= 4");
  Rational c = Rational(1, 2160) * g * (g - 1) * (g - 2) / (absb(2 * g) * absb(2 * g - 2) * absb(2 * g - 4));
  return c * lambdas(ring, Variant::open, {g - 1, g - 2, g - 4});
}

TautClass a1k_agk(int g, int k, const RingContext& ring) {
  need(k >= 1 && k <= g - 1 && ring.genus() == g, "(1^k, g-k) needs 1 <= k <= g-1");
  Rational c = 1;
  TautClass mono = TautClass::unit(g, Variant::open);
  for (int i = g - k + 1; i <= g; ++i)
    c *= Rational(i) / (6 * absb(2 * i));
  for (int i = g - 1; i >= g - k; --i)
    mono = ring.mul_generator(i, mono);
  return c * mono;
}

TautClass a1_all(int g, const RingContext& ring) {
  need(g >= 1 && ring.genus() == g, "(1^g)");
  Rational c = 1;
  TautClass mono = TautClass::unit(g, Variant::open);
  for (int i = 1; i <= g; ++i)
    c *= Rational(i) / (6 * absb(2 * i));
  for (int i = g - 1; i >= 1; --i)
    mono = ring.mul_generator(i, mono);
  return c * mono;
}

TautClass cpt_a1_ag1(int g, const RingContext& ring) {
  need(g >= 2 && ring.genus() == g, "compact (1, g-1) needs g >= 2");
  return Rational(g) / (6 * absb(2 * g)) * lambdas(ring, Variant::compact, {g - 1});
}

TautClass cpt_a2_ag2(int g, const RingContext& ring) {
  need(g >= 3 && ring.genus() == g, "compact (2, g-2) needs g >= 3");
  Rational c = Rational(1, 360) * g * (g - 1) / (absb(2 * g) * absb(2 * g - 2));
  return c * (lambdas(ring, Variant::compact, {g - 2, g - 2}) - lambdas(ring, Variant::compact, {g - 1, g - 3}));
}

TautClass cpt_a1_a1_ag2(int g, const RingContext& ring) {
  need(g >= 3 && ring.genus() == g, "compact (1, 1, g-2) needs g >= 3");
  Rational c = Rational(1, 36) * g * (g - 1) / (absb(2 * g) * absb(2 * g - 2));
  return c * (lambdas(ring, Variant::compact, {g - 1, g - 2}) - lambdas(ring, Variant::compact, {g, g - 3}));
}

} // namespace closed_form

} // namespace taut
