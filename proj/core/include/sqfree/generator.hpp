#pragma once

#include <cstdint>

#include "sqfree/matrix_file.hpp"
#include "sqfree/monomial_ideal.hpp"

namespace sqfree {

/// Random uniform-rank squarefree matrix: gamma_j random in {0,1}^n around a
/// random common core,
/// beta_i a random subset of the common support of the gammas,
/// a_ij = gamma_j - beta_i (never zero), c_ij = 1/(u_i + v_j) for distinct
/// positive u, v (a Cauchy matrix, all minors nonzero). Deterministic in the
/// seed. Requires l >= s >= 1 and 1 <= n <= 64.
MatrixFile generate_test_matrix(int n, std::size_t s, std::size_t l, std::uint64_t seed);

/// Same construction without the l >= s requirement.
MultigradedMatrix random_uniform_rank_matrix(int n, std::size_t s, std::size_t l, std::uint64_t seed);

/// A random proper nonzero squarefree ideal with at most `max_generators`
/// minimal generators.
SquarefreeIdeal random_squarefree_ideal(int n, std::size_t max_generators, std::uint64_t seed);

/// The 1 x l matrix (x^{g_1}, ..., x^{g_l}) presenting R/I.
MultigradedMatrix ideal_matrix(const SquarefreeIdeal& ideal);

}  // namespace sqfree
