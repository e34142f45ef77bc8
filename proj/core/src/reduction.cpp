#include "sqfree/reduction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sqfree/errors.hpp"

namespace sqfree {

bool DegreeSlice::present(std::size_t row) const { return std::ranges::find(columns, row) != columns.end(); }

bool DegreeSlice::leading(std::size_t row) const {
  const auto it = std::ranges::find(columns, row);
  if (it == columns.end()) return false;
  const auto c = static_cast<std::size_t>(it - columns.begin());
  return std::ranges::find(echelon.pivots, c) != echelon.pivots.end();
}

std::vector<std::size_t> DegreeSlice::standard_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t row : columns)
    if (!leading(row)) out.push_back(row);
  return out;
}

namespace {

std::vector<std::size_t> normalize_order(std::vector<std::size_t> order, std::size_t rows) {
  if (order.empty()) {
    order.resize(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  return order;
}

}  // namespace

SquarefreeModule::SquarefreeModule(const MultigradedMatrix& matrix, GradingSolution solution,
                                   std::vector<std::size_t> order)
    : order_(normalize_order(std::move(order), matrix.rows())) {
  check_solution(matrix, solution);
  if (!std::ranges::all_of(solution.gammas, &ExponentVector::is_squarefree) ||
      !std::ranges::all_of(solution.betas, &ExponentVector::is_squarefree))
    throw InputError("grading solution is not squarefree");
  solution.squarefree = true;
  matrix_ = matrix.with_row_order(order_);
  solution_.gammas = std::move(solution.gammas);
  for (std::size_t p = 0; p < order_.size(); ++p) solution_.betas.push_back(solution.betas[order_[p]]);
  solution_.squarefree = true;
}

SquarefreeModule SquarefreeModule::canonical(const MultigradedMatrix& matrix, std::vector<std::size_t> order) {
  auto solution = find_squarefree_solution(matrix);
  if (!solution) throw InputError("matrix has no squarefree grading solution");
  return SquarefreeModule(matrix, std::move(*solution), std::move(order));
}

SquarefreeModule::SquarefreeModule(const SquarefreeModule& other)
    : matrix_(other.matrix_), solution_(other.solution_), order_(other.order_) {}

std::vector<PresentationTerm> SquarefreeModule::apply_presentation(std::size_t j) const {
  if (j >= cols()) throw InputError("generator index out of range");
  std::vector<PresentationTerm> out;
  for (std::size_t i = 0; i < rows(); ++i)
    if (const auto& e = matrix_.at(i, j)) out.push_back({i, e->coefficient, e->exponent});
  return out;
}

DegreeSlice SquarefreeModule::degree_slice(const ExponentVector& delta) const {
  if (delta.n() != n()) throw InputError("degree has wrong length");
  DegreeSlice slice;
  slice.degree = delta;
  for (std::size_t p = rows(); p-- > 0;)
    if (dominated_by(beta(p), delta)) slice.columns.push_back(p);
  for (std::size_t j = 0; j < cols(); ++j)
    if (dominated_by(gamma(j), delta)) slice.generators.push_back(j);
  slice.image = RationalMatrix(slice.generators.size(), slice.columns.size());
  for (std::size_t r = 0; r < slice.generators.size(); ++r)
    for (std::size_t c = 0; c < slice.columns.size(); ++c)
      // x^(delta - gamma_j) c_ij x^(a_ij) v_i = c_ij x^(delta - beta_i) v_i
      if (const auto& e = matrix_.at(slice.columns[c], slice.generators[r])) slice.image(r, c) = e->coefficient;
  slice.echelon = echelonize(slice.image);
  return slice;
}

Reduction SquarefreeModule::reduce(std::size_t i, const ExponentVector& alpha) const {
  if (i >= rows()) throw InputError("row index out of range");
  if (alpha.n() != n()) throw InputError("degree has wrong length");
  if (!alpha.is_nonnegative()) throw InputError("reduce: exponent " + alpha.to_string() + " is not in N^n");
  auto key = std::make_pair(i, alpha.coords());
  {
    std::lock_guard lock(cache_->mutex);
    if (const auto it = cache_->reductions.find(key); it != cache_->reductions.end()) return it->second;
  }
  const DegreeSlice slice = degree_slice(alpha + beta(i));
  Reduction out;
  const auto col = static_cast<std::size_t>(std::ranges::find(slice.columns, i) - slice.columns.begin());
  const auto pivot = std::ranges::find(slice.echelon.pivots, col);
  if (pivot == slice.echelon.pivots.end()) {
    out.standard = true;
  } else {
    const auto k = static_cast<std::size_t>(pivot - slice.echelon.pivots.begin());
    // Row k of the RREF reads x^alpha v_i + sum_c R(k,c) (term c) in im(phi).
    for (std::size_t c = 0; c < slice.columns.size(); ++c) {
      if (c == col || slice.echelon.reduced(k, c).is_zero()) continue;
      const std::size_t j = slice.columns[c];
      if (j >= i) throw ConsistencyError("normal form of a leading term involves a higher generator");
      out.coefficients.emplace_back(j, -slice.echelon.reduced(k, c));
    }
    std::ranges::sort(out.coefficients, {}, &std::pair<std::size_t, Rational>::first);
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->reductions.emplace(std::move(key), std::move(out)).first->second;
}

const InitialDecomposition& SquarefreeModule::initial_decomposition() const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->decomposition) return *cache_->decomposition;
  auto d = std::make_unique<InitialDecomposition>();
  const IndexSet all = IndexSet::full(n());
  for (std::size_t i = 0; i < rows(); ++i) {
    std::vector<IndexSet> members;
    const std::uint64_t m = all.mask();
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      const IndexSet b(sub);
      if (degree_slice(ExponentVector::indicator(b, n()) + beta(i)).leading(i)) members.push_back(b);
      if (sub == 0) break;
    }
    SquarefreeIdeal ideal(n(), std::move(members));
    d->complexes.push_back(stanley_reisner(ideal));
    d->ideals.push_back(std::move(ideal));
  }
  cache_->decomposition = std::move(d);
  return *cache_->decomposition;
}

std::vector<std::pair<std::size_t, ExponentVector>> SquarefreeModule::k_basis(const ExponentVector& delta) const {
  if (delta.n() != n()) throw InputError("degree has wrong length");
  const auto& d = initial_decomposition();
  std::vector<std::pair<std::size_t, ExponentVector>> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    ExponentVector b = delta - beta(i);
    if (b.is_nonnegative() && d.complexes[i].contains(support(b))) out.emplace_back(i, std::move(b));
  }
  return out;
}

std::size_t SquarefreeModule::dim_at(const ExponentVector& delta) const { return k_basis(delta).size(); }

bool SquarefreeModule::annihilator_membership(const ExponentVector& alpha) const {
  for (std::size_t i = 0; i < rows(); ++i) {
    const Reduction r = reduce(i, alpha);
    if (r.standard || !r.coefficients.empty()) return false;
  }
  return true;
}

namespace {

// Calls f(subset) for every k-subset of {0..count-1}, subsets as sorted indices.
template <typename F>
void for_each_subset(std::size_t count, std::size_t k, F&& f) {
  if (k > count) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    f(std::as_const(idx));
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == count - k + p - 1) --p;
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

void require_uniform_wide(const MultigradedMatrix& a) {
  if (a.cols() < a.rows()) throw InputError("requires l >= s");
  if (!is_uniform_rank(a)) throw InputError("requires a uniform-rank matrix");
}

}  // namespace

InitialDecomposition uniform_rank_ideals(const SquarefreeModule& module) {
  const auto& a = module.matrix();
  require_uniform_wide(a);
  const std::size_t s = a.rows();
  InitialDecomposition d;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<IndexSet> gens;
    for_each_subset(a.cols(), s - i, [&](const std::vector<std::size_t>& cols) {
      IndexSet g;
      for (std::size_t j : cols) g = g | support(a.at(i, j)->exponent);
      gens.push_back(g);
    });
    SquarefreeIdeal ideal(a.n(), std::move(gens));
    d.complexes.push_back(stanley_reisner(ideal));
    d.ideals.push_back(std::move(ideal));
  }
  return d;
}

SquarefreeIdeal fitting_radical(const MultigradedMatrix& a) {
  require_uniform_wide(a);
  std::vector<IndexSet> gens;
  for_each_subset(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
    // Every term of the minor has the degree of its main diagonal.
    IndexSet g;
    for (std::size_t t = 0; t < cols.size(); ++t) g = g | support(a.at(t, cols[t])->exponent);
    gens.push_back(g);
  });
  return SquarefreeIdeal(a.n(), std::move(gens));
}

SquarefreeIdeal intersection_of_ideals(const InitialDecomposition& decomposition, int n) {
  SquarefreeIdeal acc = SquarefreeIdeal::unit(n);
  for (const auto& ideal : decomposition.ideals) acc = intersect(acc, ideal);
  return acc;
}

SquarefreeIdeal annihilator_by_sweep(const SquarefreeModule& module) {
  std::vector<IndexSet> members;
  const std::uint64_t m = IndexSet::full(module.n()).mask();
  for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
    if (module.annihilator_membership(ExponentVector::indicator(IndexSet(sub), module.n())))
      members.emplace_back(sub);
    if (sub == 0) break;
  }
  return SquarefreeIdeal(module.n(), std::move(members));
}

AnnihilatorResult annihilator(const SquarefreeModule& module) {
  const auto& a = module.matrix();
  if (is_uniform_rank(a)) {
    if (a.cols() < a.rows()) return {SquarefreeIdeal::zero(module.n()), "uniform rank, l < s"};
    SquarefreeIdeal fit = fitting_radical(a);
    const SquarefreeIdeal inter = intersection_of_ideals(module.initial_decomposition(), module.n());
    if (fit != inter) throw ConsistencyError("Fitting radical and intersection of initial ideals disagree");
    return {std::move(fit), "uniform rank: Fitting radical = intersection of initial ideals"};
  }
  return {annihilator_by_sweep(module), "membership sweep over squarefree degrees"};
}

int krull_dimension(const SquarefreeModule& module) {
  int best = -1;
  for (const auto& delta : module.initial_decomposition().complexes) best = std::max(best, delta.max_face_size());
  return best;
}

}  // namespace sqfree
