#pragma once

// Internal: one graded piece P / S of a free module modulo the image of the
// presentation, with a coordinate basis of the quotient. Used by the Koszul
// and Cech oracles.

#include <cstddef>
#include <vector>

#include "sqfree/linalg.hpp"
#include "sqfree/reduction.hpp"

namespace sqfree::detail {

class QuotientPiece {
 public:
  /// `rows`: generators v_i present in P. `generators`: w_j whose images span S.
  QuotientPiece(const MultigradedMatrix& a, std::vector<std::size_t> rows, const std::vector<std::size_t>& generators);

  std::size_t dim() const { return free_rows_.size(); }
  /// Rows whose classes form the quotient basis.
  const std::vector<std::size_t>& free_rows() const { return free_rows_; }
  bool present(std::size_t row) const;
  /// Class of v_row in the quotient, in free-row coordinates.
  SparseVector project(std::size_t row) const;

 private:
  std::vector<std::size_t> rows_;
  EchelonForm echelon_;
  std::vector<std::size_t> free_rows_;
  std::vector<std::ptrdiff_t> free_index_;  // by position in rows_
};

}  // namespace sqfree::detail
