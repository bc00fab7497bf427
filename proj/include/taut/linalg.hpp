#pragma once

#include "taut/rational.hpp"

#include <cstddef>
#include <vector>

namespace taut {

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form, pivoting on the first nonzero entry
/// left to right. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);
Rational determinant(Matrix m);

/// Unique solution of A x = b. Throws std::domain_error when A is singular
/// or not square.
std::vector<Rational> solve(Matrix a, const std::vector<Rational>& b);

/// Basis of { x : A x = 0 }.
std::vector<std::vector<Rational>> nullspace(Matrix a);

} // namespace taut
