#include "sqfree/betti.hpp"

#include <algorithm>

#include "quotient_piece.hpp"
#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

void require_length(const SquarefreeModule& module, const ExponentVector& alpha) {
  if (alpha.n() != module.n())
    throw InputError("degree " + alpha.to_string() + " has " + std::to_string(alpha.n()) + " coordinates, expected " +
                     std::to_string(module.n()));
}

struct Summands {
  ExponentVector alpha;
  std::vector<ExponentVector> shifted;
  std::vector<SimplicialComplex> complexes;
};

Summands summands_at(const SquarefreeModule& module, const ExponentVector& alpha) {
  const auto& dec = module.initial_decomposition();
  Summands out;
  out.alpha = alpha;
  for (std::size_t j = 0; j < module.rows(); ++j) {
    out.shifted.push_back(alpha - module.beta(j));
    out.complexes.push_back(restrict_to_degree(dec.complexes[j], out.shifted.back()));
  }
  return out;
}

std::vector<ChiTerm> chi_terms(const SquarefreeModule& module, const Summands& sm, std::size_t j, IndexSet tau, int w) {
  const ExponentVector& aj = sm.shifted[j];
  const IndexSet sigma_j = support(aj);
  const IndexSet tw = tau.with(w);
  const ExponentVector gamma = aj - squarefree_part(aj) + ExponentVector::indicator(tw, module.n());
  const Reduction red = module.reduce(j, gamma);
  std::vector<ChiTerm> out;
  if (red.standard) return out;
  const IndexSet dropped = sigma_j - tw;
  for (const auto& [i, r] : red.coefficients) {
    const ExponentVector& ai = sm.shifted[i];
    if (!ai.is_nonnegative())
      throw ConsistencyError("reduction of summand " + std::to_string(j + 1) + " reaches summand " +
                             std::to_string(i + 1) + " outside its degree range");
    const IndexSet sigma_i = support(ai);
    if (!dropped.is_subset_of(sigma_i))
      throw ConsistencyError("chi target for " + tw.to_string() + " is not a subset of supp(alpha_i)");
    const IndexSet f = sigma_i - dropped;
    if (sm.alpha.is_squarefree()) {
      if (!support(module.beta(i)).is_subset_of(tw | support(module.beta(j))))
        throw ConsistencyError("chi: sigma_beta_" + std::to_string(i + 1) + " not inside " + tw.to_string() +
                               " u sigma_beta_" + std::to_string(j + 1));
      if (f != shifted_face(module, tw, j, i))
        throw ConsistencyError("chi target disagrees with (sigma_beta_j u tau) minus sigma_beta_i");
    }
    const int sign = sgn_single(w, tw) * sgn_set(tw, sigma_j) * sgn_set(f, sigma_i);
    out.push_back({i, f, sign * r});
  }
  return out;
}

}  // namespace

IndexSet shifted_face(const SquarefreeModule& module, IndexSet tau, std::size_t j, std::size_t i) {
  return (support(module.beta(j)) | tau) - support(module.beta(i));
}

std::vector<ChiTerm> chi_map(const SquarefreeModule& module, const ExponentVector& alpha, std::size_t j, IndexSet tau,
                             int w) {
  require_length(module, alpha);
  const Summands sm = summands_at(module, alpha);
  if (!sm.complexes[j].contains(tau)) throw InputError(tau.to_string() + " is not a face of Delta_{j,alpha}");
  if (w < 1 || w > module.n() || !sm.complexes[j].vertices().contains(w) || tau.contains(w) ||
      sm.complexes[j].contains(tau.with(w)))
    throw InputError("vertex " + std::to_string(w) + " is not in V_2 of " + tau.to_string());
  return chi_terms(module, sm, j, tau, w);
}

BettiComplex build_betti_complex(const SquarefreeModule& module, const ExponentVector& alpha) {
  require_length(module, alpha);
  Summands sm = summands_at(module, alpha);
  BettiComplex out;
  out.alpha = alpha;
  out.offset = sm.shifted.empty() ? 0 : support(sm.shifted[0]).size();
  for (std::size_t j = 0; j < module.rows(); ++j) {
    out.shifts.push_back(support(sm.shifted[j]).size() - out.offset);
    for (IndexSet tau : sm.complexes[j].faces()) out.assembled.add_basis(tau.size() - 1 - out.shifts[j], {j, tau});
  }
  for (std::size_t j = 0; j < module.rows(); ++j) {
    const SimplicialComplex& delta = sm.complexes[j];
    for (IndexSet tau : delta.faces()) {
      const auto [v1, v2] = partition_vertices(delta, tau);
      for (int t : v1.members()) out.assembled.add_term({j, tau}, {j, tau.with(t)}, Rational(sgn_single(t, tau.with(t))));
      for (int w : v2.members())
        for (const ChiTerm& term : chi_terms(module, sm, j, tau, w))
          out.assembled.add_term({j, tau}, {term.summand, term.face}, term.coefficient);
    }
  }
  if (!out.assembled.squares_to_zero())
    throw ConsistencyError("C(A, " + alpha.to_string() + ") does not square to zero");
  out.shifted = std::move(sm.shifted);
  out.summands = std::move(sm.complexes);
  return out;
}

std::vector<std::size_t> betti_numbers(const SquarefreeModule& module, const ExponentVector& alpha) {
  const BettiComplex c = build_betti_complex(module, alpha);
  std::vector<std::size_t> out(static_cast<std::size_t>(module.n()) + 1, 0);
  for (const auto& [t, d] : c.assembled.cohomology_dims()) {
    const int i = c.offset - t - 1;
    if (i < 0 || i > module.n()) throw ConsistencyError("cohomology of C(A, alpha) outside the Koszul range");
    out[static_cast<std::size_t>(i)] = d;
  }
  return out;
}

std::size_t betti_number(const SquarefreeModule& module, int i, const ExponentVector& alpha) {
  if (i < 0 || i > module.n()) return 0;
  return betti_numbers(module, alpha)[static_cast<std::size_t>(i)];
}

std::vector<BettiEntry> betti_table(const SquarefreeModule& module) {
  const int n = module.n();
  std::vector<BettiEntry> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ExponentVector alpha = ExponentVector::indicator(IndexSet(mask), n);
    const auto b = betti_numbers(module, alpha);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) out.push_back({static_cast<int>(i), alpha, b[i]});
  }
  std::ranges::sort(out, [](const BettiEntry& a, const BettiEntry& b) {
    return a.i != b.i ? a.i < b.i : a.degree < b.degree;
  });
  return out;
}

KoszulStrand koszul_oracle(const SquarefreeModule& module, const ExponentVector& alpha) {
  require_length(module, alpha);
  const int n = module.n();
  const MultigradedMatrix& a = module.matrix();
  std::vector<std::optional<detail::QuotientPiece>> pieces(std::size_t{1} << n);
  CochainComplex c;
  KoszulStrand out;
  out.component_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 0; mask < pieces.size(); ++mask) {
    const IndexSet l(mask);
    const ExponentVector delta = alpha - ExponentVector::indicator(l, n);
    std::vector<std::size_t> rows;
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if ((delta - module.beta(i)).is_nonnegative()) rows.push_back(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((delta - module.gamma(j)).is_nonnegative()) gens.push_back(j);
    auto& piece = pieces[mask].emplace(a, std::move(rows), gens);
    out.component_dims[static_cast<std::size_t>(l.size())] += piece.dim();
    for (std::size_t row : piece.free_rows()) c.add_basis(-l.size(), {row, l});
  }
  // theta(m e_L) = sum_{t in L} sgn[t, L] x_t m e_{L - t}
  for (std::uint64_t mask = 0; mask < pieces.size(); ++mask) {
    const IndexSet l(mask);
    for (std::size_t row : pieces[mask]->free_rows()) {
      for (int t : l.members()) {
        const auto& target = *pieces[l.without(t).mask()];
        const int sign = sgn_single(t, l);
        for (const auto& [k, v] : target.project(row))
          c.add_term({row, l}, {target.free_rows()[k], l.without(t)}, sign * v);
      }
    }
  }
  out.betti.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [t, d] : c.cohomology_dims()) out.betti[static_cast<std::size_t>(-t)] = d;
  out.squares_to_zero = c.squares_to_zero();
  out.euler_characteristic = c.euler_characteristic();
  return out;
}

bool is_minimal_presentation(const MultigradedMatrix& matrix) {
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (const auto& e = matrix.at(i, j); e && e->exponent.is_zero()) return false;
  return true;
}

}  // namespace sqfree
