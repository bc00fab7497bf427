#pragma once

#include "taut/linalg.hpp"
#include "taut/ring.hpp"
#include "taut/taut_class.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace taut {

/// Ordered tuple (g_1, ..., g_l) of positive genera indexing the product
/// locus A_{g_1} x ... x A_{g_l} in A_g.
class ProductPartition {
public:
  explicit ProductPartition(std::vector<int> parts);
  /// "1,1,2" -> (1, 1, 2). Throws ValidationError on malformed input.
  static ProductPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int genus() const { return genus_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Codimension sum_{i>j} g_i g_j of the product locus.
  int codim() const;
  std::string to_string() const;

  auto operator<=>(const ProductPartition&) const = default;

private:
  std::vector<int> parts_;
  int genus_ = 0;
};

/// All ordered partitions (compositions) of g, in lexicographic order.
std::vector<ProductPartition> compositions(int g);

/// (g - g_1)^{g_1}, (g - g_1 - g_2)^{g_2}, ..., 0^{g_l}.
std::vector<int> alpha_vector(const ProductPartition& p);
/// Same construction for g* = g - l and parts g_i - 1 (length g - l).
std::vector<int> beta_vector(const ProductPartition& p);

/// det( lambda_{v_i - i + j} )_{1 <= i,j <= n} reduced in the given variant,
/// with lambda_0 = 1 and lambda_k = 0 for k < 0 or k > g.
TautClass schur_det(const std::vector<int>& v, const RingContext& ring, Variant variant);

/// gamma_{g_1} ... gamma_{g_l} / gamma_g.
Rational product_prefactor(const ProductPartition& p);

/// Projection of the product locus in the compactified moduli space:
/// prefactor * schur_det(alpha).
TautClass product_projection_cpt(const ProductPartition& p, const RingContext& ring);
/// Projection in the open moduli space:
/// prefactor * lambda_{g-1} ... lambda_{g-l+1} * schur_det(beta).
TautClass product_projection_open(const ProductPartition& p, const RingContext& ring);

/// Element of R*(g_1) (x) ... (x) R*(g_l), in the product of square-free bases.
class TensorClass {
public:
  using Key = std::vector<SquareFreeMonomial>;

  explicit TensorClass(std::vector<int> factors);
  static TensorClass unit(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  void add_term(const Key& key, const Rational& c);

  bool operator==(const TensorClass&) const = default;

private:
  std::vector<int> factors_;
  std::map<Key, Rational> terms_;
};

/// Factor-wise product, each factor reduced in its own compact ring.
TensorClass tensor_mul(const TensorClass& a, const TensorClass& b);

/// Pullback along the product map: the Hodge bundle splits, so
/// lambda_k -> sum_{k_1 + ... + k_l = k} lambda_{k_1} (x) ... (x) lambda_{k_l}.
TensorClass split_pullback(const TautClass& a, const ProductPartition& p, const RingContext& ring);

/// Multilinear extension of the product of factor-wise Lagrangian
/// Grassmannian integrals.
Rational product_integral(const TensorClass& t);

/// Pairing matrix between the degree-k basis (rows) and the complementary
/// basis (columns). Compact: integral over the compactification; open: the
/// lambda_g-pairing; lagrangian: unnormalized integral.
Matrix gram_matrix(const RingContext& ring, int k, Variant variant);

/// The functional delta -> <gamma, delta> on the complementary-degree basis
/// for a class gamma of codimension `codim`.
struct PairingFunctional {
  int genus = 0;
  Variant variant = Variant::compact;
  int codim = 0;
  std::map<SquareFreeMonomial, Rational> values;
};

/// Basis monomials the functional must be defined on.
std::vector<SquareFreeMonomial> complementary_basis(const RingContext& ring, Variant variant, int codim);

/// Throws ValidationError naming missing and extra monomials, or a bad
/// genus/codimension.
void validate(const PairingFunctional& f, const RingContext& ring);

/// Pairing data of a tautological class (all terms must have degree codim).
PairingFunctional pairing_of(const TautClass& t, int codim, const RingContext& ring);

/// Pairing data of the product locus derived from the Hodge splitting and
/// proportionality: prod gamma_{g_i} times the split integral (the open
/// variant pairs against lift(delta) * lambda_g).
PairingFunctional product_pairing(const ProductPartition& p, const RingContext& ring, Variant variant);

/// The unique tautological class with the given pairing data. A singular
/// Gram matrix is a violated invariant and raises std::logic_error.
TautClass project(const PairingFunctional& f, const RingContext& ring);

/// Basis (degree by degree) of { x : x * g = 0 for every g in gens }.
std::vector<TautClass> annihilator(const std::vector<TautClass>& gens, const RingContext& ring, Variant variant);

/// Spanning set of the ideal generated by h, in degree d.
std::vector<TautClass> ideal_span(const TautClass& h, int degree, const RingContext& ring);

/// Rank of a set of classes as vectors in the square-free basis.
std::size_t span_rank(const std::vector<TautClass>& classes);

/// Closed forms for the open projections of small product loci, written in
/// terms of Bernoulli numbers.
namespace closed_form {
TautClass a1_ag1(int g, const RingContext& ring);             // (1, g-1), g >= 2
TautClass a2_ag2(int g, const RingContext& ring);             // (2, g-2), g >= 3
TautClass a3_ag3(int g, const RingContext& ring);             // (3, g-3), g >= 4
TautClass a1_a2_ag3(int g, const RingContext& ring);          // (1, 2, g-3), g >= 4
TautClass a1k_agk(int g, int k, const RingContext& ring);     // (1^k, g-k), 1 <= k <= g-1
TautClass a1_all(int g, const RingContext& ring);             // (1^g)
TautClass cpt_a1_ag1(int g, const RingContext& ring);         // compact (1, g-1)
TautClass cpt_a2_ag2(int g, const RingContext& ring);         // compact (2, g-2)
TautClass cpt_a1_a1_ag2(int g, const RingContext& ring);      // compact (1, 1, g-2)
} // namespace closed_form

} // namespace taut
