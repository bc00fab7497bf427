#include "taut/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace taut::oracle {

namespace {

std::vector<Exponents> enumerate_monomials(int g, int d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(g), 0);
  // Depth-first over e_1, e_2, ... with increasing exponent gives
  // lexicographic order directly.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == g) {
      if (remaining == 0)
        out.push_back(e);
      return;
    }
    int weight = var + 1;
    for (int x = 0; x * weight <= remaining; ++x) {
      e[static_cast<std::size_t>(var)] = x;
      rec(var + 1, remaining - x * weight);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, d);
  return out;
}

bool is_square_free(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
}

SquareFreeMonomial to_square_free(const Exponents& e) {
  SquareFreeMonomial m;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == 1)
      m = m.with(static_cast<int>(i) + 1);
  return m;
}

void axpy(DegreeSlice::SparseRow& y, const Rational& a, const DegreeSlice::SparseRow& x) {
  for (auto& [p, v] : x) {
    auto [it, inserted] = y.try_emplace(p, 0);
    it->second -= a * v;
    if (it->second == 0)
      y.erase(it);
  }
}

} // namespace

Exponents exponents_of(int genus, SquareFreeMonomial m, int extra_generator) {
  Exponents e(static_cast<std::size_t>(genus), 0);
  for (int i : m.indices())
    e[static_cast<std::size_t>(i - 1)] += 1;
  if (extra_generator >= 1 && extra_generator <= genus)
    e[static_cast<std::size_t>(extra_generator - 1)] += 1;
  return e;
}

DegreeSlice::DegreeSlice(int genus, int degree) : genus_(genus), degree_(degree) {
  if (genus < 1 || degree < 0)
    throw std::invalid_argument("DegreeSlice: bad genus or degree");
  monomials_ = enumerate_monomials(genus, degree);

  // Elimination positions: non-square-free monomials first, then the
  // square-free ones, each group in lexicographic order.
  for (const auto& e : monomials_)
    if (!is_square_free(e))
      by_position_.push_back(e);
  for (const auto& e : monomials_)
    if (is_square_free(e))
      by_position_.push_back(e);
  square_free_count_ = static_cast<std::size_t>(std::count_if(monomials_.begin(), monomials_.end(), is_square_free));
  for (std::size_t p = 0; p < by_position_.size(); ++p)
    position_of_.emplace(by_position_[p], static_cast<int>(p));

  for (int k = 1; k <= genus && 2 * k <= degree; ++k) {
    Polynomial rel = mumford_graded_relation(genus, k);
    for (const auto& mu : enumerate_monomials(genus, degree - 2 * k)) {
      Polynomial mono(genus);
      mono.add_term(mu, 1);
      Polynomial product = rel * mono;
      SparseRow row;
      for (auto& [e, c] : product.terms())
        row[position(e)] += c;
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      relations_.push_back(row);
      insert_row(std::move(row));
    }
  }

  std::size_t non_square_free = by_position_.size() - square_free_count_;
  for (std::size_t p = 0; p < non_square_free; ++p)
    if (!pivots_.count(static_cast<int>(p)))
      throw std::logic_error("oracle: non-square-free monomial not reducible in degree " + std::to_string(degree));
}

int DegreeSlice::position(const Exponents& e) const {
  auto it = position_of_.find(e);
  if (it == position_of_.end())
    throw std::invalid_argument("oracle: monomial of wrong degree for slice");
  return it->second;
}

void DegreeSlice::insert_row(SparseRow row) {
  std::vector<int> hits;
  for (auto& [p, v] : row)
    if (pivots_.count(p))
      hits.push_back(p);
  for (int p : hits) {
    auto it = row.find(p);
    if (it == row.end())
      continue;
    Rational f = it->second;
    axpy(row, f, pivots_.at(p));
  }
  if (row.empty())
    return;
  int lead = row.begin()->first;
  Rational inv = 1 / row.begin()->second;
  for (auto& [p, v] : row)
    v *= inv;
  for (auto& [q, prow] : pivots_) {
    auto it = prow.find(lead);
    if (it == prow.end())
      continue;
    Rational f = it->second;
    axpy(prow, f, row);
  }
  pivots_.emplace(lead, std::move(row));
}

TermMap DegreeSlice::project_row(const SparseRow& row) const {
  std::size_t non_square_free = by_position_.size() - square_free_count_;
  TermMap out;
  auto add = [&out](SquareFreeMonomial m, const Rational& c) {
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        out.erase(it);
    }
  };
  for (auto& [p, v] : row) {
    if (static_cast<std::size_t>(p) >= non_square_free) {
      add(to_square_free(by_position_[static_cast<std::size_t>(p)]), v);
      continue;
    }
    // Pivot row reads  mu + sum c_s s = 0  (mod I), so mu == -sum c_s s.
    for (auto& [q, c] : pivots_.at(p))
      if (q != p)
        add(to_square_free(by_position_[static_cast<std::size_t>(q)]), -v * c);
  }
  return out;
}

TermMap DegreeSlice::normal_form(const Exponents& e) const {
  SparseRow row{{position(e), Rational(1)}};
  return project_row(row);
}

bool DegreeSlice::projection_kills_relations() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [this](const SparseRow& r) { return project_row(r).empty(); });
}

const DegreeSlice& OracleRing::slice(int degree) {
  auto it = slices_.find(degree);
  if (it == slices_.end())
    it = slices_.emplace(degree, DegreeSlice(genus_, degree)).first;
  return it->second;
}

OracleResult OracleRing::normal_form(const Polynomial& p) {
  if (p.num_vars() != genus_)
    throw std::invalid_argument("oracle: polynomial genus mismatch");
  OracleResult res{TautClass(genus_, Variant::compact), false};
  int top = top_degree(genus_, Variant::compact);
  for (auto& [e, c] : p.terms()) {
    int d = weighted_degree(e);
    if (d > top) {
      res.degree_exceeded = true;
      continue;
    }
    for (auto& [m, v] : slice(d).normal_form(e))
      res.value.add_term(m, c * v);
  }
  return res;
}

OracleResult oracle_normal_form(const Polynomial& p) {
  OracleRing ring(p.num_vars());
  return ring.normal_form(p);
}

OracleReport oracle_compare(const RingContext& ring) {
  int g = ring.genus();
  OracleRing oracle(g);
  OracleReport report;
  report.genus = g;
  for (int k = 1; k <= g; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      auto m = SquareFreeMonomial::from_mask(mask);
      Polynomial p(g);
      p.add_term(exponents_of(g, m, k), 1);
      TautClass expected = oracle.normal_form(p).value;
      TautClass actual(g, Variant::compact, ring.generator_product(k, m));
      ++report.checked;
      if (!(expected == actual))
        report.mismatches.push_back({k, m, render(actual), render(expected)});
    }
  }
  return report;
}

} // namespace taut::oracle
