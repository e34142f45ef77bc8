#include "quotient_piece.hpp"

#include <algorithm>

#include "sqfree/errors.hpp"

namespace sqfree::detail {

QuotientPiece::QuotientPiece(const MultigradedMatrix& a, std::vector<std::size_t> rows,
                             const std::vector<std::size_t>& generators)
    : rows_(std::move(rows)) {
  RationalMatrix s(generators.size(), rows_.size());
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& e = a.at(i, generators[r]);
      if (!e) continue;
      const auto it = std::ranges::find(rows_, i);
      if (it == rows_.end()) throw ConsistencyError("image of a generator leaves its graded piece");
      s(r, static_cast<std::size_t>(it - rows_.begin())) = e->coefficient;
    }
  }
  echelon_ = echelonize(s);
  free_index_.assign(rows_.size(), -1);
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    if (std::ranges::find(echelon_.pivots, c) != echelon_.pivots.end()) continue;
    free_index_[c] = static_cast<std::ptrdiff_t>(free_rows_.size());
    free_rows_.push_back(rows_[c]);
  }
}

bool QuotientPiece::present(std::size_t row) const { return std::ranges::find(rows_, row) != rows_.end(); }

SparseVector QuotientPiece::project(std::size_t row) const {
  const auto it = std::ranges::find(rows_, row);
  if (it == rows_.end()) throw ConsistencyError("projecting a generator absent from the graded piece");
  const auto c = static_cast<std::size_t>(it - rows_.begin());
  if (free_index_[c] >= 0) return {{static_cast<std::size_t>(free_index_[c]), Rational(1)}};
  const auto k = static_cast<std::size_t>(std::ranges::find(echelon_.pivots, c) - echelon_.pivots.begin());
  // e_c + sum_free R(k, f) e_f lies in S.
  SparseVector out;
  for (std::size_t f = 0; f < rows_.size(); ++f)
    if (free_index_[f] >= 0 && !echelon_.reduced(k, f).is_zero())
      out.emplace_back(static_cast<std::size_t>(free_index_[f]), -echelon_.reduced(k, f));
  return out;
}

}  // namespace sqfree::detail
