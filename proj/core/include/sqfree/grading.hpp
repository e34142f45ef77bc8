#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/exponents.hpp"
#include "sqfree/rational.hpp"

namespace sqfree {

/// A nonzero entry c * x^a of a presentation matrix.
struct MatrixEntry {
  Rational coefficient;
  ExponentVector exponent;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// An s x l matrix of monomial entries over k[x_1..x_n]. Rows and columns are
/// 0-based in this API; absent entries are zero.
class MultigradedMatrix {
 public:
  MultigradedMatrix() = default;
  MultigradedMatrix(int n, std::size_t rows, std::size_t cols);

  int n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Stores c * x^a at (i, j). Throws InputError when c == 0, a has a
  /// negative coordinate or the wrong length, or (i, j) is out of range.
  void set(std::size_t i, std::size_t j, Rational coefficient, ExponentVector exponent);
  void erase(std::size_t i, std::size_t j);

  const std::optional<MatrixEntry>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  bool has(std::size_t i, std::size_t j) const { return at(i, j).has_value(); }
  std::size_t entry_count() const;

  /// Matrix with rows permuted: row p of the result is row order[p] here.
  MultigradedMatrix with_row_order(const std::vector<std::size_t>& order) const;

  friend bool operator==(const MultigradedMatrix&, const MultigradedMatrix&) = default;

 private:
  int n_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::optional<MatrixEntry>> entries_;
};

/// Column degrees gamma_j and row degrees beta_i with gamma_j - beta_i = a_ij.
struct GradingSolution {
  std::vector<ExponentVector> gammas;
  std::vector<ExponentVector> betas;
  bool squarefree = false;
  friend bool operator==(const GradingSolution&, const GradingSolution&) = default;
};

/// A node of the bipartite entry graph.
struct GraphNode {
  enum class Kind { Row, Column } kind;
  std::size_t index;
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct MultigradedCheck {
  bool ok = true;
  /// On failure: a closed walk row -> column -> row ... through the entry
  /// graph whose alternating exponent sum is nonzero.
  std::vector<GraphNode> cycle;
  ExponentVector cycle_sum;
};

/// Checks consistency of the degree equations by spanning-forest propagation.
MultigradedCheck validate_multigraded(const MultigradedMatrix& a);

/// All solutions of the degree equations: a base assignment plus one free
/// Z^n translation per connected component of the entry graph. The base is
/// translated per component and coordinate so its minimum value is 0.
struct GeneralSolution {
  std::size_t component_count = 0;
  std::vector<std::size_t> column_component;
  std::vector<std::size_t> row_component;
  std::vector<ExponentVector> base_gammas;
  std::vector<ExponentVector> base_betas;
};

/// Throws InputError when the matrix is not multigraded.
GeneralSolution solve_grading_system(const MultigradedMatrix& a);

/// The canonical (min-normalized) squarefree solution, or nullopt when no
/// squarefree solution exists.
std::optional<GradingSolution> find_squarefree_solution(const MultigradedMatrix& a);

/// True iff every entry is nonzero and every square minor of the
/// coefficient matrix is nonzero.
bool is_uniform_rank(const MultigradedMatrix& a);

/// gamma_j = join of column j, beta_i = gamma_1 - a_i1. Requires uniform rank
/// and squarefree entry exponents; checks agreement with
/// find_squarefree_solution.
GradingSolution canonical_uniform_solution(const MultigradedMatrix& a);

/// Throws InputError unless gamma_j - beta_i = a_ij for every entry.
void check_solution(const MultigradedMatrix& a, const GradingSolution& t);

MultigradedMatrix transpose(const MultigradedMatrix& a);

}  // namespace sqfree
