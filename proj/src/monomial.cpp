#include "taut/monomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace taut {

SquareFreeMonomial SquareFreeMonomial::from_indices(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i <= prev || i > kMaxIndex)
      throw std::invalid_argument("monomial indices must be strictly increasing and in 1.." +
                                  std::to_string(kMaxIndex));
    mask |= bit(i);
    prev = i;
  }
  return SquareFreeMonomial(mask);
}

int SquareFreeMonomial::max_index() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

int SquareFreeMonomial::degree() const {
  int d = 0;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    d += std::countr_zero(m) + 1;
  return d;
}

std::vector<int> SquareFreeMonomial::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering SquareFreeMonomial::operator<=>(const SquareFreeMonomial& other) const {
  std::uint32_t diff = mask_ ^ other.mask_;
  if (diff == 0)
    return std::strong_ordering::equal;
  // Both lists agree below the lowest differing index p. The list holding p
  // is smaller unless the other list stops there (it is then a prefix).
  std::uint32_t low = diff & (~diff + 1);
  bool mine = (mask_ & low) != 0;
  std::uint32_t rest = mine ? (other.mask_ & ~(low | (low - 1))) : (mask_ & ~(low | (low - 1)));
  if (rest == 0)
    return mine ? std::strong_ordering::greater : std::strong_ordering::less;
  return mine ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string render(const SquareFreeMonomial& m) {
  if (m.is_unit())
    return "1";
  auto idx = m.indices();
  std::string out;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (!out.empty())
      out += '*';
    out += 'l' + std::to_string(*it);
  }
  return out;
}

std::string render_ascending(const SquareFreeMonomial& m) {
  if (m.is_unit())
    return "1";
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty())
      out += '*';
    out += 'l' + std::to_string(i);
  }
  return out;
}

std::vector<SquareFreeMonomial> square_free_basis(int n, int degree) {
  std::vector<SquareFreeMonomial> out;
  if (n < 0 || n > SquareFreeMonomial::kMaxIndex)
    throw std::invalid_argument("square_free_basis: bad generator count");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto m = SquareFreeMonomial::from_mask(static_cast<std::uint32_t>(mask));
    if (m.degree() == degree)
      out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> poincare_coefficients(int n) {
  std::vector<long> c{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next(c.size() + static_cast<std::size_t>(i), 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d] += c[d];
      next[d + static_cast<std::size_t>(i)] += c[d];
    }
    c = std::move(next);
  }
  return c;
}

} // namespace taut
