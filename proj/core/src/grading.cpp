#include "sqfree/grading.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "sqfree/errors.hpp"
#include "sqfree/linalg.hpp"

namespace sqfree {

MultigradedMatrix::MultigradedMatrix(int n, std::size_t rows, std::size_t cols)
    : n_(n), rows_(rows), cols_(cols), entries_(rows * cols) {
  if (n < 1 || n > kMaxVariables) throw InputError("variable count must be in 1.." + std::to_string(kMaxVariables));
}

void MultigradedMatrix::set(std::size_t i, std::size_t j, Rational coefficient, ExponentVector exponent) {
  if (i >= rows_ || j >= cols_) throw InputError("entry index out of range");
  if (coefficient.is_zero()) throw InputError("entry coefficient must be nonzero");
  if (exponent.n() != n_) throw InputError("entry exponent has wrong length");
  if (!exponent.is_nonnegative()) throw InputError("entry exponent must be nonnegative");
  entries_[i * cols_ + j] = MatrixEntry{std::move(coefficient), std::move(exponent)};
}

void MultigradedMatrix::erase(std::size_t i, std::size_t j) { entries_.at(i * cols_ + j).reset(); }

std::size_t MultigradedMatrix::entry_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(entries_, [](const auto& e) { return e.has_value(); }));
}

MultigradedMatrix MultigradedMatrix::with_row_order(const std::vector<std::size_t>& order) const {
  if (order.size() != rows_) throw InputError("row order must list every row exactly once");
  std::vector<bool> seen(rows_, false);
  for (std::size_t r : order) {
    if (r >= rows_ || seen[r]) throw InputError("row order must list every row exactly once");
    seen[r] = true;
  }
  MultigradedMatrix out(n_, rows_, cols_);
  for (std::size_t p = 0; p < rows_; ++p)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[p * cols_ + j] = at(order[p], j);
  return out;
}

namespace {

struct Propagation {
  std::vector<std::optional<ExponentVector>> value;  // rows first, then columns
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
  std::optional<std::pair<std::size_t, std::size_t>> conflict;  // (row, col)
};

Propagation propagate(const MultigradedMatrix& a) {
  const std::size_t s = a.rows();
  const std::size_t total = s + a.cols();
  Propagation p;
  p.value.resize(total);
  p.parent.assign(total, -1);
  p.component.assign(total, 0);
  for (std::size_t root = 0; root < total; ++root) {
    if (p.value[root]) continue;
    const std::size_t comp = p.component_count++;
    p.value[root] = ExponentVector(a.n());
    p.component[root] = comp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const bool is_row = u < s;
      const std::size_t count = is_row ? a.cols() : s;
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i = is_row ? u : k;
        const std::size_t j = is_row ? k : u - s;
        const auto& e = a.at(i, j);
        if (!e) continue;
        const std::size_t v = is_row ? s + j : i;
        // gamma_j - beta_i = a_ij
        ExponentVector expected = is_row ? *p.value[u] + e->exponent : *p.value[u] - e->exponent;
        if (!p.value[v]) {
          p.value[v] = std::move(expected);
          p.parent[v] = static_cast<std::ptrdiff_t>(u);
          p.component[v] = comp;
          queue.push_back(v);
        } else if (*p.value[v] != expected && !p.conflict) {
          p.conflict = std::make_pair(i, j);
        }
      }
    }
  }
  return p;
}

GraphNode node_of(std::size_t id, std::size_t s) {
  return id < s ? GraphNode{GraphNode::Kind::Row, id} : GraphNode{GraphNode::Kind::Column, id - s};
}

std::vector<std::size_t> path_to_root(const Propagation& p, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (p.parent[path.back()] >= 0) path.push_back(static_cast<std::size_t>(p.parent[path.back()]));
  return path;
}

}  // namespace

MultigradedCheck validate_multigraded(const MultigradedMatrix& a) {
  const Propagation p = propagate(a);
  MultigradedCheck out;
  out.cycle_sum = ExponentVector(a.n());
  if (!p.conflict) return out;
  out.ok = false;
  const auto [i, j] = *p.conflict;
  const std::size_t s = a.rows();
  auto up_i = path_to_root(p, i);
  auto up_j = path_to_root(p, s + j);
  // Trim the shared part above the lowest common ancestor.
  while (up_i.size() > 1 && up_j.size() > 1 && up_i[up_i.size() - 2] == up_j[up_j.size() - 2]) {
    up_i.pop_back();
    up_j.pop_back();
  }
  for (std::size_t v : up_i) out.cycle.push_back(node_of(v, s));
  for (auto it = up_j.rbegin() + 1; it != up_j.rend(); ++it) out.cycle.push_back(node_of(*it, s));
  out.cycle.push_back(node_of(i, s));
  // Walking the tree from row i to column j accumulates gamma_j - beta_i;
  // closing along the offending edge subtracts a_ij.
  out.cycle_sum = *p.value[s + j] - *p.value[i] - a.at(i, j)->exponent;
  return out;
}

GeneralSolution solve_grading_system(const MultigradedMatrix& a) {
  const Propagation p = propagate(a);
  if (p.conflict) throw InputError("matrix is not multigraded (degree equations are inconsistent)");
  const std::size_t s = a.rows();
  GeneralSolution g;
  g.component_count = p.component_count;
  g.row_component.assign(p.component.begin(), p.component.begin() + static_cast<std::ptrdiff_t>(s));
  g.column_component.assign(p.component.begin() + static_cast<std::ptrdiff_t>(s), p.component.end());
  std::vector<ExponentVector> minima(p.component_count, ExponentVector(a.n()));
  std::vector<bool> seen(p.component_count, false);
  for (std::size_t v = 0; v < p.value.size(); ++v) {
    const std::size_t c = p.component[v];
    if (!seen[c]) {
      minima[c] = *p.value[v];
      seen[c] = true;
      continue;
    }
    for (int k = 1; k <= a.n(); ++k) minima[c][k] = std::min(minima[c][k], (*p.value[v])[k]);
  }
  for (std::size_t i = 0; i < s; ++i) g.base_betas.push_back(*p.value[i] - minima[p.component[i]]);
  for (std::size_t j = 0; j < a.cols(); ++j) g.base_gammas.push_back(*p.value[s + j] - minima[p.component[s + j]]);
  return g;
}

std::optional<GradingSolution> find_squarefree_solution(const MultigradedMatrix& a) {
  GeneralSolution g = solve_grading_system(a);
  // After min-normalization every coordinate starts at 0, so a squarefree
  // translate exists iff every coordinate's range has width <= 1.
  auto ok = [](const ExponentVector& v) { return v.is_squarefree(); };
  if (!std::ranges::all_of(g.base_gammas, ok) || !std::ranges::all_of(g.base_betas, ok)) return std::nullopt;
  return GradingSolution{std::move(g.base_gammas), std::move(g.base_betas), true};
}

namespace {

std::vector<std::size_t> indices_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

}  // namespace

bool is_uniform_rank(const MultigradedMatrix& a) {
  const std::size_t s = a.rows();
  const std::size_t l = a.cols();
  if (s == 0 || l == 0) return false;
  if (s > 63 || l > 63) throw InputError("uniform-rank check supports at most 63 rows and columns");
  RationalMatrix c(s, l);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (!a.has(i, j)) return false;
      c(i, j) = a.at(i, j)->coefficient;
    }
  // Multigradedness makes every minor det(coefficients) * x^degree, so only
  // the coefficient minors matter. 1x1 minors are covered above.
  for (std::uint64_t rmask = 1; rmask < (std::uint64_t{1} << s); ++rmask) {
    if (std::popcount(rmask) < 2) continue;
    const auto rows = indices_of(rmask);
    for (std::uint64_t cmask = 1; cmask < (std::uint64_t{1} << l); ++cmask) {
      if (std::popcount(cmask) != std::popcount(rmask)) continue;
      if (determinant(c, rows, indices_of(cmask)).is_zero()) return false;
    }
  }
  return true;
}

void check_solution(const MultigradedMatrix& a, const GradingSolution& t) {
  if (t.gammas.size() != a.cols() || t.betas.size() != a.rows())
    throw InputError("grading solution has the wrong number of degrees");
  for (const auto& v : t.gammas)
    if (v.n() != a.n()) throw InputError("grading solution degree has wrong length");
  for (const auto& v : t.betas)
    if (v.n() != a.n()) throw InputError("grading solution degree has wrong length");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& e = a.at(i, j);
      if (e && t.gammas[j] - t.betas[i] != e->exponent)
        throw InputError("grading solution violates the degree equation at entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
    }
  const bool sq = std::ranges::all_of(t.gammas, &ExponentVector::is_squarefree) &&
                  std::ranges::all_of(t.betas, &ExponentVector::is_squarefree);
  if (t.squarefree && !sq) throw InputError("grading solution is flagged squarefree but is not");
}

GradingSolution canonical_uniform_solution(const MultigradedMatrix& a) {
  if (!is_uniform_rank(a)) throw InputError("canonical uniform solution requires a uniform-rank matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j)->exponent.is_squarefree())
        throw InputError("canonical uniform solution requires squarefree entry exponents");
  GradingSolution t;
  t.squarefree = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<ExponentVector> column;
    for (std::size_t i = 0; i < a.rows(); ++i) column.push_back(a.at(i, j)->exponent);
    t.gammas.push_back(join(column));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) t.betas.push_back(t.gammas[0] - a.at(i, 0)->exponent);
  check_solution(a, t);
  const auto canonical = find_squarefree_solution(a);
  if (!canonical || *canonical != t)
    throw ConsistencyError("join-based grading disagrees with the min-normalized squarefree solution");
  return t;
}

MultigradedMatrix transpose(const MultigradedMatrix& a) {
  MultigradedMatrix t(a.n(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (const auto& e = a.at(i, j)) t.set(j, i, e->coefficient, e->exponent);
  return t;
}

}  // namespace sqfree
