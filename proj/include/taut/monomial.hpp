#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace taut {

/// Product of distinct generators lambda_i, stored as a bitmask (bit i-1 set
/// when lambda_i divides). The empty mask is the unit.
class SquareFreeMonomial {
public:
  static constexpr int kMaxIndex = 31;

  constexpr SquareFreeMonomial() = default;

  /// Indices must be strictly increasing and in 1..kMaxIndex.
  static SquareFreeMonomial from_indices(const std::vector<int>& indices);
  static constexpr SquareFreeMonomial from_mask(std::uint32_t mask) { return SquareFreeMonomial(mask); }
  /// lambda_1 lambda_2 ... lambda_n.
  static constexpr SquareFreeMonomial full(int n) {
    return SquareFreeMonomial(n <= 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool is_unit() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return i >= 1 && i <= kMaxIndex && ((mask_ >> (i - 1)) & 1u); }
  constexpr SquareFreeMonomial with(int i) const { return SquareFreeMonomial(mask_ | bit(i)); }
  constexpr SquareFreeMonomial without(int i) const { return SquareFreeMonomial(mask_ & ~bit(i)); }
  int max_index() const;

  /// Weighted degree: sum of the indices.
  int degree() const;
  std::vector<int> indices() const;

  /// Canonical order: lexicographic on the increasing index lists.
  std::strong_ordering operator<=>(const SquareFreeMonomial& other) const;
  constexpr bool operator==(const SquareFreeMonomial&) const = default;

private:
  constexpr explicit SquareFreeMonomial(std::uint32_t mask) : mask_(mask) {}
  static constexpr std::uint32_t bit(int i) { return 1u << (i - 1); }

  std::uint32_t mask_ = 0;
};

/// "l3*l1" (largest index first), or "1" for the unit.
std::string render(const SquareFreeMonomial& m);
/// "l1*l3", as used in table cells and basis listings.
std::string render_ascending(const SquareFreeMonomial& m);

/// All square-free monomials in lambda_1..lambda_n of weighted degree d, in
/// canonical order.
std::vector<SquareFreeMonomial> square_free_basis(int n, int degree);

/// Coefficients of prod_{i=1}^{n} (1 + t^i).
std::vector<long> poincare_coefficients(int n);

} // namespace taut
