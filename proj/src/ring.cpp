#include "taut/ring.hpp"

#include "taut/arith.hpp"
#include "taut/errors.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace taut {

namespace {

// Normal forms of lambda_k * m via the square rule
//   lambda_k^2 = 2 sum_{t=1}^{k} (-1)^{t-1} lambda_{k-t} lambda_{k+t},
// which is Mumford's degree-2k relation solved for lambda_k^2. Each rewrite
// replaces the index multiset {k, k} by {k-t, k+t}, strictly raising the sum
// of squared indices at fixed degree, so the recursion is well founded:
// every call is either of lower degree or of the same degree with a larger
// (bounded) sum of squares.
class TableBuilder {
public:
  explicit TableBuilder(int g)
      : g_(g), memo_(static_cast<std::size_t>(g),
                     std::vector<std::optional<TermMap>>(std::size_t{1} << g)) {}

  const TermMap& product(int k, SquareFreeMonomial m) {
    auto& slot = memo_[static_cast<std::size_t>(k - 1)][m.mask()];
    if (slot)
      return *slot;
    TermMap result;
    if (!m.contains(k)) {
      result.emplace(m.with(k), 1);
    } else {
      SquareFreeMonomial rest = m.without(k);
      for (int t = 1; t <= k && k + t <= g_; ++t) {
        Rational coeff(t % 2 == 1 ? 2 : -2);
        TermMap inner = product(k + t, rest);
        for (auto& [m2, c2] : inner) {
          if (k - t == 0) {
            accumulate(result, m2, coeff * c2);
            continue;
          }
          TermMap outer = product(k - t, m2);
          for (auto& [m3, c3] : outer)
            accumulate(result, m3, coeff * c2 * c3);
        }
      }
    }
    slot = std::move(result);
    return *slot;
  }

  std::vector<std::vector<TermMap>> finish() {
    std::vector<std::vector<TermMap>> table(static_cast<std::size_t>(g_));
    for (int k = 1; k <= g_; ++k) {
      auto& row = table[static_cast<std::size_t>(k - 1)];
      row.resize(std::size_t{1} << g_);
      for (std::uint32_t mask = 0; mask < (1u << g_); ++mask)
        row[mask] = product(k, SquareFreeMonomial::from_mask(mask));
    }
    return table;
  }

private:
  static void accumulate(TermMap& into, SquareFreeMonomial m, const Rational& c) {
    if (c == 0)
      return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        into.erase(it);
    }
  }

  int g_;
  std::vector<std::vector<std::optional<TermMap>>> memo_;
};

void add_scaled(TermMap& into, const TermMap& from, const Rational& s) {
  for (auto& [m, c] : from) {
    Rational v = c * s;
    auto [it, inserted] = into.try_emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        into.erase(it);
    }
  }
}

} // namespace

RingContext::RingContext(int genus) : genus_(genus), gamma_(gamma_g(genus)) {}

std::shared_ptr<const RingContext> build_ring(int g, RingOptions opts) {
  if (g < 1)
    throw std::invalid_argument("build_ring: genus must be >= 1");
  int cap = opts.allow_large ? kLargeGenusCap : kDefaultGenusCap;
  if (g > cap)
    throw ResourceLimitError("genus " + std::to_string(g) + " exceeds the ring table cap of " +
                             std::to_string(cap) +
                             (opts.allow_large ? "" : " (pass allow_large / --allow-large for up to 10)"));
  std::shared_ptr<RingContext> ring(new RingContext(g));
  ring->table_ = TableBuilder(g).finish();
  return ring;
}

std::shared_ptr<const RingContext> shared_ring(int g, RingOptions opts) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RingContext>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(g);
  if (it != cache.end())
    return it->second;
  auto ring = build_ring(g, opts);
  cache.emplace(g, ring);
  return ring;
}

const TermMap& RingContext::generator_product(int k, SquareFreeMonomial m) const {
  if (k < 1 || k > genus_ || m.max_index() > genus_)
    throw std::out_of_range("generator_product: index out of range");
  return table_[static_cast<std::size_t>(k - 1)][m.mask()];
}

std::vector<SquareFreeMonomial> RingContext::basis(int degree, Variant v) const {
  return square_free_basis(v == Variant::open ? genus_ - 1 : genus_, degree);
}

std::vector<long> RingContext::dimensions(Variant v) const {
  std::vector<long> dims(static_cast<std::size_t>(top_degree(genus_, v)) + 1, 0);
  int n = v == Variant::open ? genus_ - 1 : genus_;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    ++dims[static_cast<std::size_t>(SquareFreeMonomial::from_mask(mask).degree())];
  return dims;
}

std::size_t RingContext::total_dimension(Variant v) const {
  return std::size_t{1} << (v == Variant::open ? genus_ - 1 : genus_);
}

void RingContext::check(const TautClass& a) const {
  if (a.genus() != genus_)
    throw std::invalid_argument("class of genus " + std::to_string(a.genus()) + " used with ring of genus " +
                                std::to_string(genus_));
}

namespace {

TermMap open_filter(TermMap terms, int g) {
  std::erase_if(terms, [g](const auto& kv) { return kv.first.contains(g); });
  return terms;
}

} // namespace

TautClass RingContext::mul_generator(int k, const TautClass& a) const {
  check(a);
  if (k == 0)
    return a;
  TautClass zero(genus_, a.variant());
  if (k < 0 || k > genus_ || (a.variant() == Variant::open && k == genus_))
    return zero;
  TermMap out;
  for (auto& [m, c] : a.terms())
    add_scaled(out, generator_product(k, m), c);
  if (a.variant() == Variant::open)
    out = open_filter(std::move(out), genus_);
  return TautClass(genus_, a.variant(), std::move(out));
}

TautClass RingContext::mul(const TautClass& a, const TautClass& b) const {
  check(a);
  check(b);
  if (a.variant() != b.variant())
    throw std::invalid_argument("mul: variant mismatch");
  TermMap out;
  for (auto& [mb, cb] : b.terms()) {
    TermMap partial = a.terms();
    for (int i : mb.indices()) {
      TermMap next;
      for (auto& [m, c] : partial)
        add_scaled(next, generator_product(i, m), c);
      partial = std::move(next);
    }
    add_scaled(out, partial, cb);
  }
  if (a.variant() == Variant::open)
    out = open_filter(std::move(out), genus_);
  return TautClass(genus_, a.variant(), std::move(out));
}

TautClass RingContext::pow(const TautClass& a, int n) const {
  if (n < 0)
    throw std::invalid_argument("pow: negative exponent");
  TautClass out = TautClass::unit(genus_, a.variant());
  for (int i = 0; i < n; ++i)
    out = mul(out, a);
  return out;
}

TautClass RingContext::reduce(const Polynomial& p, Variant v) const {
  if (p.num_vars() != genus_)
    throw std::invalid_argument("reduce: polynomial has wrong number of variables");
  TautClass out(genus_, v);
  for (auto& [e, c] : p.terms()) {
    TautClass term = TautClass::unit(genus_, Variant::compact);
    for (int k = 1; k <= genus_; ++k)
      for (int r = 0; r < e[static_cast<std::size_t>(k - 1)]; ++r)
        term = mul_generator(k, term);
    term *= c;
    out += v == Variant::open ? restrict_open(term) : term.relabel(v);
  }
  return out;
}

Rational RingContext::integrate_lg(const TautClass& a) const {
  check(a);
  if (a.variant() == Variant::open)
    throw std::invalid_argument("integrate_lg: open classes have no Lagrangian Grassmannian integral");
  return a.coeff(SquareFreeMonomial::full(genus_));
}

Rational RingContext::integrate_abar(const TautClass& a) const {
  check(a);
  if (a.variant() != Variant::compact)
    throw std::invalid_argument("integrate_abar: requires a compact-variant class");
  return gamma_ * integrate_lg(a);
}

Rational RingContext::integrate_open(const TautClass& a) const {
  check(a);
  if (a.variant() != Variant::open)
    throw std::invalid_argument("integrate_open: requires an open-variant class");
  return integrate_abar(mul_generator(genus_, lift(a)));
}

TautClass RingContext::restrict_open(const TautClass& a) const {
  check(a);
  if (a.variant() != Variant::compact)
    throw std::invalid_argument("restrict_open: requires a compact-variant class");
  return TautClass(genus_, Variant::open, open_filter(a.terms(), genus_));
}

TautClass RingContext::lift(const TautClass& a) const {
  check(a);
  if (a.variant() != Variant::open)
    throw std::invalid_argument("lift: requires an open-variant class");
  return a.relabel(Variant::compact);
}

} // namespace taut
