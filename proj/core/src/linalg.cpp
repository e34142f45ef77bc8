#include "sqfree/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sqfree/errors.hpp"

namespace sqfree {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::ranges::all_of(entries_, [](const Rational& q) { return q.is_zero(); });
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

EchelonForm echelonize_ordered(const RationalMatrix& m, std::span<const std::size_t> column_order) {
  if (column_order.size() != m.cols()) throw InputError("column order is not a permutation");
  {
    std::vector<bool> seen(m.cols(), false);
    for (std::size_t c : column_order) {
      if (c >= m.cols() || seen[c]) throw InputError("column order is not a permutation");
      seen[c] = true;
    }
  }
  EchelonForm out{m, {}, 0};
  RationalMatrix& a = out.reduced;
  std::size_t next = 0;
  for (std::size_t c : column_order) {
    if (next == a.rows()) break;
    std::size_t p = next;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, next);
    const Rational inv = Rational(1) / a(next, c);
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(next, k).is_zero()) a(next, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(next, k).is_zero()) a(r, k).sub_mul(f, a(next, k));
    }
    out.pivots.push_back(c);
    ++next;
  }
  out.rank = next;
  return out;
}

EchelonForm echelonize(const RationalMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return echelonize_ordered(m, order);
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) rows[r].emplace_back(c, m(r, c));
  return rank_of_rows(std::move(rows));
}

std::optional<std::vector<Rational>> solve_consistent(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const EchelonForm e = echelonize(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < e.rank; ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

Rational determinant(const RationalMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw InputError("determinant of a non-square selection");
  const std::size_t n = rows.size();
  RationalMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(rows[r], cols[c]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(r, k).sub_mul(f, a(c, k));
    }
  }
  return det;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return determinant(m, idx, idx);
}

namespace {

// row -= factor * pivot, both sparse and sorted by index.
SparseVector axpy(const SparseVector& row, const Rational& factor, const SparseVector& pivot) {
  SparseVector out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      Rational v = 0;
      v.sub_mul(factor, pivot[j].second);
      out.emplace_back(pivot[j].first, std::move(v));
      ++j;
    } else {
      Rational v = row[i].second;
      v.sub_mul(factor, pivot[j].second);
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_of_rows(std::vector<SparseVector> rows) {
  std::ranges::stable_sort(rows, {}, &SparseVector::size);
  // Pivot rows keyed by leading index, each normalized to leading 1.
  std::map<std::size_t, SparseVector> pivots;
  for (auto& row : rows) {
    SparseVector cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      const Rational factor = cur.front().second;
      cur = axpy(cur, factor, it->second);
    }
    if (cur.empty()) continue;
    const Rational inv = Rational(1) / cur.front().second;
    for (auto& [idx, v] : cur) v *= inv;
    const std::size_t lead = cur.front().first;
    pivots.emplace(lead, std::move(cur));
  }
  return pivots.size();
}

}  // namespace sqfree
