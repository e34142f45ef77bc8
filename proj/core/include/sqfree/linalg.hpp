#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sqfree/rational.hpp"

namespace sqfree {

/// Dense row-major matrix over Q. Indices are 0-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Result of Gauss-Jordan elimination with a prescribed pivot-column order.
struct EchelonForm {
  /// Reduced matrix: the first `rank` rows are the nonzero rows, row k has
  /// its pivot (equal to 1) at pivots[k]; remaining rows are zero.
  RationalMatrix reduced;
  /// Pivot columns in order of selection.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form where pivots are searched by scanning columns in
/// `column_order` (a permutation of 0..cols-1). The result is the unique RREF
/// relative to that order.
EchelonForm echelonize_ordered(const RationalMatrix& m, std::span<const std::size_t> column_order);
EchelonForm echelonize(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Some x with m x = rhs, or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve_consistent(const RationalMatrix& m, std::span<const Rational> rhs);

/// Determinant of the submatrix picked out by `rows` x `cols`. Throws
/// InputError when the selection is not square.
Rational determinant(const RationalMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
Rational determinant(const RationalMatrix& m);

/// Sparse vector: (index, nonzero value), indices strictly increasing.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Rank of the span of the given sparse vectors. Incremental echelon with
/// shortest-first insertion; the workhorse for cohomology computations.
std::size_t rank_of_rows(std::vector<SparseVector> rows);

}  // namespace sqfree
