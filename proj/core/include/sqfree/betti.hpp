#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sqfree/cochain.hpp"
#include "sqfree/reduction.hpp"
#include "sqfree/simplicial.hpp"

namespace sqfree {

/// The complex C(A, alpha): per generator j the cochain complex of
/// Delta_{j,alpha} = (Delta_j)_{alpha - beta_j}, shifted by
/// l_j = |supp(alpha_j)| - |supp(alpha_1)|, glued by the correction maps chi_j.
struct BettiComplex {
  ExponentVector alpha;
  std::vector<ExponentVector> shifted;  // alpha_j = alpha - beta_j
  std::vector<int> shifts;              // l_j
  std::vector<SimplicialComplex> summands;
  CochainComplex assembled;
  /// |supp(alpha_1)|; b_{i,alpha} = H^{offset - i - 1}.
  int offset = 0;
};

struct ChiTerm {
  std::size_t summand;
  IndexSet face;
  Rational coefficient;
};

/// (sigma_{beta_j} u tau) \ sigma_{beta_i}: where a face of summand j lands in
/// summand i.
IndexSet shifted_face(const SquarefreeModule& module, IndexSet tau, std::size_t j, std::size_t i);

/// chi_j(tau^*, w) for tau in Delta_{j,alpha} and w in V_2: the terms in the
/// lower summands i < j. Throws ConsistencyError if a target is not a face.
std::vector<ChiTerm> chi_map(const SquarefreeModule& module, const ExponentVector& alpha, std::size_t j, IndexSet tau,
                             int w);

BettiComplex build_betti_complex(const SquarefreeModule& module, const ExponentVector& alpha);

std::size_t betti_number(const SquarefreeModule& module, int i, const ExponentVector& alpha);

/// b_{i,alpha} for i = 0..n from one complex.
std::vector<std::size_t> betti_numbers(const SquarefreeModule& module, const ExponentVector& alpha);

struct BettiEntry {
  int i;
  ExponentVector degree;
  std::size_t value;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero b_{i,alpha} over alpha in {0,1}^n, ordered by (i, alpha).
std::vector<BettiEntry> betti_table(const SquarefreeModule& module);

/// Degree-alpha strand of M (x) K computed from quotient spaces
/// (F_0)_gamma / im(phi)_gamma of the presentation, independent of the
/// initial-module machinery.
struct KoszulStrand {
  std::vector<std::size_t> betti;           // index i = 0..n
  std::vector<std::size_t> component_dims;  // dim (M (x) K_i)_alpha
  bool squares_to_zero = true;
  long euler_characteristic = 0;  // of the chain groups
};

KoszulStrand koszul_oracle(const SquarefreeModule& module, const ExponentVector& alpha);

/// True when no entry is a unit (every a_ij != 0).
bool is_minimal_presentation(const MultigradedMatrix& matrix);

}  // namespace sqfree
