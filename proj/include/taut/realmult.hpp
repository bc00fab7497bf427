#pragma once

#include "taut/polynomial.hpp"
#include "taut/ring.hpp"
#include "taut/taut_class.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taut {

/// Input data for a totally real field F of degree e acting on abelian
/// varieties of dimension g = m e.
struct RMFieldData {
  int e = 1;
  int m = 1;
  /// zeta_F(-1), zeta_F(-3), ..., zeta_F(1 - 2m).
  std::vector<Rational> zeta_values;
  /// Commensurability index [Sp_2m(O_F) : Sp_2m(O_F + d^-1)], opaque input.
  Rational index = 1;
  std::optional<long> quadratic_discriminant;

  int genus() const { return m * e; }
  /// Throws ValidationError when e, m or the zeta list are inconsistent.
  void validate() const;
};

/// Schur determinant for the partition (m(e-1))^m, (m(e-2))^m, ..., m^m, 0^m.
std::vector<int> schur_me_vector(int m, int e);
TautClass schur_me(int m, int e, const RingContext& ring);

/// (-1)^{e m(m+1)/2} 2^{-g} zeta_F(-1) ... zeta_F(1-2m).
Rational gamma_prime_f(const RMFieldData& f);
/// gamma'_F times the index.
Rational gamma_f(const RMFieldData& f);

struct ConjectureF {
  Rational constant;
  TautClass cls; // constant * Schur_{m,e}, compact variant
};

/// (-1)^{g(g-m)/2} * prod zeta_F(1-2j) / prod_{j<=g} zeta(1-2j) * index.
Rational conjecture_f_constant(const RMFieldData& f);
ConjectureF conjecture_f_class(const RMFieldData& f, const RingContext& ring);

/// e(Sym^2 E) = prod_{i<=j} (a_i + a_j) written in the elementary symmetric
/// functions of m Chern roots, i.e. as a polynomial in lambda_1..lambda_m.
Polynomial sym2_euler_polynomial(int m);
/// Its image in the ring of genus m (m <= 5).
TautClass sym2_euler(int m, const RingContext& ring);

/// Expresses a symmetric polynomial in m variables (exponent vectors over
/// the roots) in the elementary symmetric basis. Throws std::invalid_argument
/// if the input is not symmetric.
Polynomial to_elementary(const std::map<Exponents, Rational>& roots_poly, int m);

struct IdentityCheck {
  bool pass = false;
  std::string detail;
};

/// split(lambda_e lambda_2e ... lambda_me) over (m, ..., m) equals
/// (lambda_1...lambda_m)^{(x) e}.
IdentityCheck euler_split_identity(int m, int e);

/// Orbifold Euler characteristic zeta_F(-1)...zeta_F(1-2m); also asserts
/// it equals (-1)^{e m(m+1)/2} gamma'_F 2^{m e} (throws std::logic_error
/// otherwise).
Rational chi_orb(const RMFieldData& f);

bool is_fundamental_discriminant(long d);
/// zeta_F(-1) for the real quadratic field of discriminant D via
/// (1/60) sum_{b^2 < D, b = D mod 2} sigma_1((D - b^2)/4).
Rational zeta_f_quadratic(long discriminant);

} // namespace taut
