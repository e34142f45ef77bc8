#include "sqfree/local_cohomology.hpp"

#include <algorithm>

#include "quotient_piece.hpp"
#include "sqfree/betti.hpp"
#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

void require_length(const SquarefreeModule& module, const ExponentVector& alpha) {
  if (alpha.n() != module.n())
    throw InputError("degree " + alpha.to_string() + " has " + std::to_string(alpha.n()) + " coordinates, expected " +
                     std::to_string(module.n()));
}

bool same_coefficients(const Reduction& a, const Reduction& b) {
  if (a.standard || b.standard) return a.coefficients.empty() && b.coefficients.empty();
  if (a.coefficients.size() != b.coefficients.size()) return false;
  for (std::size_t k = 0; k < a.coefficients.size(); ++k)
    if (a.coefficients[k].first != b.coefficients[k].first || a.coefficients[k].second != b.coefficients[k].second)
      return false;
  return true;
}

}  // namespace

LocalCohomologyComplex build_L_complex(const SquarefreeModule& module, const ExponentVector& alpha,
                                       SubscriptRule rule) {
  require_length(module, alpha);
  const int n = module.n();
  const auto& dec = module.initial_decomposition();
  LocalCohomologyComplex out;
  out.alpha = alpha;
  for (std::size_t i = 0; i < module.rows(); ++i) {
    out.shifted.push_back(alpha - module.beta(i));
    out.negative_supports.push_back(support(out.shifted[i].negative_part()));
    out.summands.push_back(link_type_complex(dec.complexes[i], out.shifted[i]));
  }
  out.offset = out.negative_supports.empty() ? 0 : out.negative_supports[0].size();
  for (std::size_t i = 0; i < module.rows(); ++i) {
    out.shifts.push_back(out.negative_supports[i].size() - out.offset);
    for (IndexSet tau : out.summands[i].faces()) out.assembled.add_basis(tau.size() - 1 + out.shifts[i], {i, tau});
  }
  for (std::size_t i = 0; i < module.rows(); ++i) {
    const SimplicialComplex& delta = out.summands[i];
    const IndexSet neg_i = out.negative_supports[i];
    const ExponentVector plus_i = out.shifted[i].positive_part();
    for (IndexSet tau : delta.faces()) {
      const auto [v1, v2] = partition_vertices(delta, tau);
      for (int h : v1.members()) out.assembled.add_term({i, tau}, {i, tau.with(h)}, Rational(sgn_single(h, tau.with(h))));
      for (int h : v2.members()) {
        const IndexSet th = tau.with(h);
        const IndexSet f = th | neg_i;
        const ExponentVector localized = plus_i + ExponentVector::indicator(f, n);
        const ExponentVector literal = out.shifted[i].negative_part() + ExponentVector::indicator(th, n);
        const Reduction red_localized = module.reduce(i, localized);
        const Reduction red_literal = module.reduce(i, literal);
        if (!same_coefficients(red_localized, red_literal))
          out.disagreements.push_back({i, tau, h, localized, literal});
        const bool use_localized = rule == SubscriptRule::Localized;
        const Reduction& red = use_localized ? red_localized : red_literal;
        if (use_localized && red.standard)
          throw ConsistencyError("L complex: x^" + localized.to_string() + " v_" + std::to_string(i + 1) +
                                 " is standard although " + th.to_string() + " is not a face");
        const int base = sgn_single(h, th) * transposition_sign(neg_i, f);
        for (const auto& [j, r] : red.coefficients) {
          const IndexSet neg_j = out.negative_supports[j];
          if (!neg_j.is_subset_of(f))
            throw ConsistencyError("L complex: supp(alpha_" + std::to_string(j + 1) + "^-) not inside " +
                                   f.to_string());
          const IndexSet target = f - neg_j;
          if (!out.summands[j].contains(target))
            throw ConsistencyError("L complex: " + target.to_string() + " is not a face of Delta_" +
                                   std::to_string(j + 1) + "^alpha");
          out.assembled.add_term({i, tau}, {j, target}, base * transposition_sign(neg_j, f) * r);
        }
      }
    }
  }
  if (!out.assembled.squares_to_zero())
    throw ConsistencyError("L^" + alpha.to_string() + " does not square to zero");
  return out;
}

std::map<int, std::size_t> local_cohomology_dims(const SquarefreeModule& module, const ExponentVector& alpha) {
  const LocalCohomologyComplex c = build_L_complex(module, alpha);
  std::map<int, std::size_t> out;
  for (const auto& [t, d] : c.assembled.cohomology_dims()) out[t + c.offset + 1] = d;
  return out;
}

CechStrand cech_oracle(const SquarefreeModule& module, const ExponentVector& alpha) {
  require_length(module, alpha);
  const int n = module.n();
  const MultigradedMatrix& a = module.matrix();
  std::vector<IndexSet> row_neg;
  std::vector<IndexSet> gen_neg;
  for (std::size_t i = 0; i < a.rows(); ++i) row_neg.push_back(support((alpha - module.beta(i)).negative_part()));
  for (std::size_t j = 0; j < a.cols(); ++j) gen_neg.push_back(support((alpha - module.gamma(j)).negative_part()));

  std::vector<std::optional<detail::QuotientPiece>> pieces(std::size_t{1} << n);
  CochainComplex c;
  CechStrand out;
  out.component_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 0; mask < pieces.size(); ++mask) {
    const IndexSet f(mask);
    std::vector<std::size_t> rows;
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (row_neg[i].is_subset_of(f)) rows.push_back(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (gen_neg[j].is_subset_of(f)) gens.push_back(j);
    auto& piece = pieces[mask].emplace(a, std::move(rows), gens);
    out.component_dims[static_cast<std::size_t>(f.size())] += piece.dim();
    for (std::size_t row : piece.free_rows()) c.add_basis(f.size(), {row, f});
  }
  const IndexSet all = IndexSet::full(n);
  for (std::uint64_t mask = 0; mask < pieces.size(); ++mask) {
    const IndexSet f(mask);
    for (std::size_t row : pieces[mask]->free_rows()) {
      for (int h : (all - f).members()) {
        const auto& target = *pieces[f.with(h).mask()];
        const int sign = sgn_single(h, f.with(h));
        for (const auto& [k, v] : target.project(row))
          c.add_term({row, f}, {target.free_rows()[k], f.with(h)}, sign * v);
      }
    }
  }
  out.dims = c.cohomology_dims();
  out.squares_to_zero = c.squares_to_zero();
  out.euler_characteristic = c.euler_characteristic();
  return out;
}

ExponentVector pattern_representative(IndexSet plus, IndexSet minus, int n, int scale) {
  if (!plus.disjoint_from(minus)) throw InputError("sign pattern supports overlap");
  return scale * (ExponentVector::indicator(plus, n) - ExponentVector::indicator(minus, n));
}

std::vector<PatternResult> pattern_sweep(const SquarefreeModule& module, bool check_stability) {
  const int n = module.n();
  std::uint64_t count = 1;
  for (int k = 0; k < n; ++k) count *= 3;
  std::vector<PatternResult> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    PatternResult p;
    std::uint64_t rest = code;
    for (int k = 1; k <= n; ++k, rest /= 3) {
      if (rest % 3 == 1) p.plus = p.plus.with(k);
      if (rest % 3 == 2) p.minus = p.minus.with(k);
    }
    const LocalCohomologyComplex c = build_L_complex(module, pattern_representative(p.plus, p.minus, n));
    for (const auto& [t, d] : c.assembled.cohomology_dims()) p.dims[t + c.offset + 1] = d;
    p.subscript_disagreements = c.disagreements.size();
    if (check_stability) p.stable = local_cohomology_dims(module, pattern_representative(p.plus, p.minus, n, 2)) == p.dims;
    out.push_back(std::move(p));
  }
  return out;
}

DepthDimReport depth_and_dim_report(const SquarefreeModule& module, const std::vector<PatternResult>& sweep,
                                    const std::vector<BettiEntry>& betti) {
  DepthDimReport r;
  for (const PatternResult& p : sweep)
    for (const auto& [i, d] : p.dims) {
      if (d == 0) continue;
      r.min_index = r.min_index ? std::min(*r.min_index, i) : i;
      r.max_index = r.max_index ? std::max(*r.max_index, i) : i;
    }
  r.krull_dimension = krull_dimension(module);
  for (const BettiEntry& e : betti) r.projective_dimension = std::max(r.projective_dimension.value_or(e.i), e.i);
  if (r.projective_dimension) r.n_minus_pd = module.n() - *r.projective_dimension;
  return r;
}

DepthDimReport depth_and_dim_report(const SquarefreeModule& module) {
  return depth_and_dim_report(module, pattern_sweep(module, false), betti_table(module));
}

}  // namespace sqfree
