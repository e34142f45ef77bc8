#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/grading.hpp"
#include "sqfree/linalg.hpp"
#include "sqfree/monomial_ideal.hpp"
#include "sqfree/simplicial.hpp"

namespace sqfree {

/// One term c * x^a * v_row of a free-module element.
struct PresentationTerm {
  std::size_t row;
  Rational coefficient;
  ExponentVector exponent;
};

/// The ideals I_1..I_s with in(im phi) = I_1 v_1 + ... + I_s v_s, and their
/// Stanley-Reisner complexes.
struct InitialDecomposition {
  std::vector<SquarefreeIdeal> ideals;
  std::vector<SimplicialComplex> complexes;
  friend bool operator==(const InitialDecomposition& a, const InitialDecomposition& b) {
    return a.ideals == b.ideals && a.complexes == b.complexes;
  }
};

/// The multidegree-delta piece of F_0 and of im(phi). In a fixed multidegree
/// every row block holds at most one monomial, x^(delta - beta_i) v_i, so the
/// slice is a small matrix with one column per present row.
struct DegreeSlice {
  ExponentVector degree;
  /// Present rows i (delta - beta_i >= 0), highest priority first. Column c
  /// of `image` corresponds to row columns[c].
  std::vector<std::size_t> columns;
  /// Generators j with delta - gamma_j >= 0; row r of `image` is
  /// x^(delta - gamma_j) phi(w_j).
  std::vector<std::size_t> generators;
  RationalMatrix image;
  /// RREF of `image` with pivots scanned in column order.
  EchelonForm echelon;

  bool present(std::size_t row) const;
  /// True iff x^(delta - beta_row) v_row is a leading term of im(phi)_delta.
  bool leading(std::size_t row) const;
  std::vector<std::size_t> standard_rows() const;
};

/// Normal form of x^alpha v_i: either already standard, or the coefficients
/// r_{i,j,alpha} (j < i, zeros omitted) with
/// x^alpha v_i = sum_j r_{i,j,alpha} x^(alpha + beta_i - beta_j) v_j mod im(phi).
struct Reduction {
  bool standard = false;
  std::vector<std::pair<std::size_t, Rational>> coefficients;
};

/// A squarefree module M = coker(phi_T) for a squarefree grading T, with a
/// fixed priority order on the generators v_i (position over term).
///
/// Rows are stored in priority order: internal row p is original row
/// order()[p], and v_{p'} > v_p whenever p' > p. All row indices taken and
/// returned by this class are internal. The default order is the identity,
/// i.e. v_s > ... > v_1.
///
/// Queries are safe to call concurrently; caches are guarded internally.
class SquarefreeModule {
 public:
  /// `order` lists original rows from lowest to highest priority (empty means
  /// identity). Throws InputError when the solution does not solve the
  /// matrix's degree equations or is not squarefree.
  SquarefreeModule(const MultigradedMatrix& matrix, GradingSolution solution, std::vector<std::size_t> order = {});
  /// Uses the canonical squarefree solution. Throws InputError when the
  /// matrix is not multigraded or has no squarefree solution.
  static SquarefreeModule canonical(const MultigradedMatrix& matrix, std::vector<std::size_t> order = {});

  SquarefreeModule(const SquarefreeModule& other);
  SquarefreeModule& operator=(const SquarefreeModule&) = delete;

  int n() const { return matrix_.n(); }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  const MultigradedMatrix& matrix() const { return matrix_; }
  const GradingSolution& solution() const { return solution_; }
  const ExponentVector& beta(std::size_t i) const { return solution_.betas[i]; }
  const ExponentVector& gamma(std::size_t j) const { return solution_.gammas[j]; }
  const std::vector<std::size_t>& order() const { return order_; }

  /// phi_T(w_j) = sum_i c_ij x^(a_ij) v_i.
  std::vector<PresentationTerm> apply_presentation(std::size_t j) const;

  DegreeSlice degree_slice(const ExponentVector& delta) const;

  /// Throws InputError when alpha has a negative coordinate.
  Reduction reduce(std::size_t i, const ExponentVector& alpha) const;

  const InitialDecomposition& initial_decomposition() const;

  /// Standard elements x^(delta - beta_i) v_i of degree delta, as (i, exponent).
  std::vector<std::pair<std::size_t, ExponentVector>> k_basis(const ExponentVector& delta) const;
  std::size_t dim_at(const ExponentVector& delta) const;

  /// x^alpha in ann(M) iff x^alpha v_i reduces to 0 for every i.
  bool annihilator_membership(const ExponentVector& alpha) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<std::size_t, std::vector<int>>, Reduction> reductions;
    std::unique_ptr<InitialDecomposition> decomposition;
  };

  MultigradedMatrix matrix_;
  GradingSolution solution_;
  std::vector<std::size_t> order_;
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

/// I_i generated by joins of the exponents of every (s-i+1)-subset of row i.
/// Requires a uniform-rank matrix with l >= s.
InitialDecomposition uniform_rank_ideals(const SquarefreeModule& module);

/// Radical of the ideal of maximal minors: squarefree parts of the degrees of
/// the s x s minors. Requires uniform rank and l >= s.
SquarefreeIdeal fitting_radical(const MultigradedMatrix& matrix);

/// I_1 cap ... cap I_s.
SquarefreeIdeal intersection_of_ideals(const InitialDecomposition& decomposition, int n);

/// Sweeps annihilator_membership over {0,1}^n.
SquarefreeIdeal annihilator_by_sweep(const SquarefreeModule& module);

struct AnnihilatorResult {
  SquarefreeIdeal ideal;
  std::string method;
};

/// Zero for uniform rank with l < s; the (cross-checked) Fitting radical for
/// uniform rank with l >= s; the membership sweep otherwise.
AnnihilatorResult annihilator(const SquarefreeModule& module);

/// Krull dimension: the largest face size over the complexes Delta_j, i.e.
/// n - min codim(I_j). Returns -1 for the zero module.
int krull_dimension(const SquarefreeModule& module);

}  // namespace sqfree
