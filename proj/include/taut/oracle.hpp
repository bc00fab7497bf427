#pragma once

#include "taut/polynomial.hpp"
#include "taut/ring.hpp"
#include "taut/taut_class.hpp"

#include <map>
#include <string>
#include <vector>

namespace taut::oracle {

/// Brute-force model of one graded piece of Q[lambda_1..lambda_g]/I, where I
/// is generated by Mumford's graded relations p_2, p_4, ..., p_2g.
///
/// Every monomial of weighted degree d (any exponents) is a column. Rows are
/// p_{2k} * mu for every monomial mu of degree d - 2k. The rows are brought to
/// reduced echelon form with the non-square-free columns ordered first, so
/// each non-square-free monomial ends up as a pivot expressed through the
/// square-free ones. No rewriting rule is used anywhere.
class DegreeSlice {
public:
  using SparseRow = std::map<int, Rational>; // keyed by elimination position

  DegreeSlice(int genus, int degree);

  int genus() const { return genus_; }
  int degree() const { return degree_; }
  /// All exponent vectors of weighted degree d, lexicographic order.
  const std::vector<Exponents>& monomials() const { return monomials_; }
  std::size_t square_free_count() const { return square_free_count_; }
  std::size_t relation_count() const { return relations_.size(); }
  std::size_t rank() const { return pivots_.size(); }

  /// Normal form of a single monomial of this degree in the square-free basis.
  TermMap normal_form(const Exponents& e) const;
  /// Applies the projection to every relation row; true when all vanish.
  bool projection_kills_relations() const;

private:
  int position(const Exponents& e) const;
  TermMap project_row(const SparseRow& row) const;
  void insert_row(SparseRow row);

  int genus_;
  int degree_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, int> position_of_;
  std::vector<Exponents> by_position_;
  std::size_t square_free_count_ = 0;
  std::vector<SparseRow> relations_;
  std::map<int, SparseRow> pivots_;
};

struct OracleResult {
  TautClass value;
  /// Set when part of the input sat above the top degree and was dropped.
  bool degree_exceeded = false;
};

/// Lazily built slices for one genus. Not thread-safe.
class OracleRing {
public:
  explicit OracleRing(int genus) : genus_(genus) {}

  int genus() const { return genus_; }
  const DegreeSlice& slice(int degree);
  OracleResult normal_form(const Polynomial& p);

private:
  int genus_;
  std::map<int, DegreeSlice> slices_;
};

/// Normal form in the compact ring computed purely by row reduction.
OracleResult oracle_normal_form(const Polynomial& p);

struct OracleMismatch {
  int generator;
  SquareFreeMonomial monomial;
  std::string table_value;
  std::string oracle_value;
};

struct OracleReport {
  int genus = 0;
  std::size_t checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Checks every entry lambda_k * m of the ring's reduction tables against
/// the oracle.
OracleReport oracle_compare(const RingContext& ring);

/// Exponent vector of a square-free monomial times lambda_k.
Exponents exponents_of(int genus, SquareFreeMonomial m, int extra_generator = 0);

} // namespace taut::oracle
