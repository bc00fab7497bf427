#pragma once

#include "taut/table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace taut {

struct Check {
  std::string group;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string group, std::string label, bool pass, std::string detail = {});
  void merge(const Report& other);
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  /// Columns: group, check, result, detail.
  Table table() const;
};

/// integrate_lg(Schur_alpha * P) against the split product integral, for
/// every composition of g and every complementary basis monomial P.
Report verify_thm15(int g);
/// Factorization of the open determinant, agreement with the restricted
/// compact projection, and invariance under permuting the parts.
Report verify_thm16(int g);
/// lambda_j^2 lambda_{j+1} ... lambda_{g-1} = 0 in the open ring.
Report verify_relations(int g);
/// Ann(lambda_{g-1}, ..., lambda_{g-l+1}) = (lambda_{g-1} ... lambda_{g-l+1})
/// degree by degree, 2 <= l <= min(lmax, g).
Report verify_annihilators(int g, int lmax = 4);
/// Every Gram matrix nonsingular, compact and open, all degrees.
Report verify_gorenstein(int g);
/// project(pairing_of(t)) == t on every basis class, both variants.
Report verify_idempotence(int g);
/// Reduction tables against the linear-algebra oracle, plus slice dimensions.
Report verify_oracle(int g);
/// Worked values, closed-form families up to gmax, constants.
Report verify_examples(int gmax);
/// Real-multiplication identities and constants.
Report verify_appendix(int gmax);

/// Suite names for the CLI.
const std::vector<std::string>& suite_names();
/// Default genus bound of a suite.
int suite_default_gmax(std::string_view suite);
/// Runs a suite for every genus up to gmax. Throws ValidationError for an
/// unknown suite name.
Report run_suite(std::string_view suite, int gmax);

} // namespace taut
