#pragma once

#include "taut/polynomial.hpp"
#include "taut/taut_class.hpp"

#include <memory>
#include <vector>

namespace taut {

/// Genus cap for ring tables: 8 by default, 10 with allow_large.
inline constexpr int kDefaultGenusCap = 8;
inline constexpr int kLargeGenusCap = 10;

struct RingOptions {
  bool allow_large = false;
};

/// The ring Q[lambda_1..lambda_g] / (Mumford relation) in the square-free
/// monomial basis. Holds, for each generator lambda_k and each basis
/// monomial m, the normal form of lambda_k * m. Immutable once built.
///
/// The same tables serve all three variants: lagrangian is the compact
/// ring with unnormalized integration, and open is the quotient by the
/// span of monomials divisible by lambda_g (lambda_g^2 = 0 makes that span
/// an ideal).
class RingContext {
public:
  int genus() const { return genus_; }

  /// Normal form of lambda_k * m in the compact ring (k in 1..g).
  const TermMap& generator_product(int k, SquareFreeMonomial m) const;

  std::vector<SquareFreeMonomial> basis(int degree, Variant v) const;
  /// Number of basis elements per degree 0..top_degree(v).
  std::vector<long> dimensions(Variant v) const;
  std::size_t total_dimension(Variant v) const;

  /// lambda_k * a, reduced. Honors the conventions of TautClass::generator.
  TautClass mul_generator(int k, const TautClass& a) const;
  TautClass mul(const TautClass& a, const TautClass& b) const;
  TautClass pow(const TautClass& a, int n) const;
  /// Image of an arbitrary polynomial in the lambdas.
  TautClass reduce(const Polynomial& p, Variant v) const;

  /// Coefficient of lambda_1...lambda_g (normalization int_{LG} x_1...x_g = 1).
  Rational integrate_lg(const TautClass& a) const;
  /// gamma_g * integrate_lg(a); compact variant only.
  Rational integrate_abar(const TautClass& a) const;
  /// Integral of lift(a) * lambda_g over the compactification; open variant only.
  Rational integrate_open(const TautClass& a) const;

  /// Quotient map to the open ring: drop every monomial divisible by lambda_g.
  TautClass restrict_open(const TautClass& a) const;
  /// Lift an open class to the compact ring using the same monomials.
  TautClass lift(const TautClass& a) const;

private:
  friend std::shared_ptr<const RingContext> build_ring(int g, RingOptions opts);
  explicit RingContext(int genus);
  void check(const TautClass& a) const;

  int genus_;
  Rational gamma_;
  std::vector<std::vector<TermMap>> table_; // [k-1][mask]
};

/// Builds reduction tables for genus g. Throws ResourceLimitError beyond the
/// cap and std::invalid_argument for g < 1.
std::shared_ptr<const RingContext> build_ring(int g, RingOptions opts = {});

/// Process-wide cache of built rings (thread-safe).
std::shared_ptr<const RingContext> shared_ring(int g, RingOptions opts = {});

} // namespace taut
