#include "taut/linalg.hpp"

#include <stdexcept>

namespace taut {

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0)
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        swap(m(sel, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0)
        continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Rational determinant(Matrix m) {
  if (m.rows() != m.cols())
    throw std::domain_error("determinant: matrix is not square");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0)
      ++sel;
    if (sel == n)
      return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j)
        swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0)
        continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j)
        m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::vector<Rational> solve(Matrix a, const std::vector<Rational>& b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::domain_error("solve: system is not square");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::domain_error("solve: matrix is singular");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug(i, n);
  return x;
}

std::vector<std::vector<Rational>> nullspace(Matrix a) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace taut
