#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sqfree/betti.hpp"
#include "sqfree/cochain.hpp"
#include "sqfree/reduction.hpp"
#include "sqfree/simplicial.hpp"

namespace sqfree {

/// Where the literal subscript alpha_i^- + underline(tau h) and the
/// localized rewriting subscript alpha_i^+ + underline(tau h u supp(alpha_i^-))
/// give different reduction coefficients.
struct SubscriptDisagreement {
  std::size_t summand;
  IndexSet face;
  int vertex;
  ExponentVector localized;
  ExponentVector literal;
};

/// L^alpha(A): per generator i the cochain complex of
/// Delta_i^alpha = (Delta_i)^{alpha_i}, shifted by
/// l_i^- = |supp(alpha_i^-)| - |supp(alpha_1^-)|.
struct LocalCohomologyComplex {
  ExponentVector alpha;
  std::vector<ExponentVector> shifted;  // alpha_i = alpha - beta_i
  std::vector<IndexSet> negative_supports;
  std::vector<int> shifts;
  std::vector<SimplicialComplex> summands;
  CochainComplex assembled;
  /// |supp(alpha_1^-)|; H^i_m(M)_alpha = H^{i - offset - 1}.
  int offset = 0;
  std::vector<SubscriptDisagreement> disagreements;
};

/// Which reduction coefficient drives the V_2 terms. `Localized` uses
/// r_{i,j, alpha_i^+ + underline(tau h u supp(alpha_i^-))}; `Literal` uses
/// r_{i,j, alpha_i^- + underline(tau h)} and exists for comparison only (it
/// may fail the consistency checks).
enum class SubscriptRule { Localized, Literal };

LocalCohomologyComplex build_L_complex(const SquarefreeModule& module, const ExponentVector& alpha,
                                       SubscriptRule rule = SubscriptRule::Localized);

/// Nonzero dim H^i_m(M)_alpha, keyed by i.
std::map<int, std::size_t> local_cohomology_dims(const SquarefreeModule& module, const ExponentVector& alpha);

/// Degree-alpha strand of the Cech complex K(x^inf, M), built from localized
/// quotients of the presentation.
struct CechStrand {
  std::map<int, std::size_t> dims;          // nonzero H^r, keyed by r
  std::vector<std::size_t> component_dims;  // dim K^r_alpha, r = 0..n
  bool squares_to_zero = true;
  long euler_characteristic = 0;
};

CechStrand cech_oracle(const SquarefreeModule& module, const ExponentVector& alpha);

/// alpha = underline(plus) - underline(minus) scaled by `scale`.
ExponentVector pattern_representative(IndexSet plus, IndexSet minus, int n, int scale = 1);

struct PatternResult {
  IndexSet plus;
  IndexSet minus;
  std::map<int, std::size_t> dims;
  /// Same dims at the doubled representative.
  bool stable = true;
  std::size_t subscript_disagreements = 0;
};

/// All 3^n sign patterns, enumerated in base-3 order over the variables
/// (digit 0: absent, 1: plus, 2: minus; variable 1 least significant).
std::vector<PatternResult> pattern_sweep(const SquarefreeModule& module, bool check_stability = true);

struct DepthDimReport {
  std::optional<int> min_index;  // depth candidate
  std::optional<int> max_index;  // dimension candidate
  int krull_dimension = -1;
  std::optional<int> projective_dimension;
  std::optional<int> n_minus_pd;
};

DepthDimReport depth_and_dim_report(const SquarefreeModule& module, const std::vector<PatternResult>& sweep,
                                    const std::vector<BettiEntry>& betti);
DepthDimReport depth_and_dim_report(const SquarefreeModule& module);

}  // namespace sqfree
