#include "sqfree/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

IndexSet random_subset(std::mt19937_64& rng, IndexSet within) {
  IndexSet out;
  for (int k : within.members())
    if (rng() & 1U) out = out.with(k);
  return out;
}

std::vector<long> distinct_positive(std::mt19937_64& rng, std::size_t count) {
  std::vector<long> pool(count * 3);
  std::iota(pool.begin(), pool.end(), 1L);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

}  // namespace

MultigradedMatrix random_uniform_rank_matrix(int n, std::size_t s, std::size_t l, std::uint64_t seed) {
  if (n < 1 || n > kMaxVariables) throw InputError("generator needs 1 <= n <= 64");
  if (s < 1 || l < 1) throw InputError("generator needs s >= 1 and l >= 1");
  std::mt19937_64 rng(seed);
  const IndexSet all = IndexSet::full(n);
  std::vector<IndexSet> gammas(l);
  std::vector<IndexSet> betas(s);
  while (true) {
    const IndexSet core = random_subset(rng, all);
    IndexSet common = all;
    for (auto& g : gammas) {
      g = core | random_subset(rng, all);
      common = common & g;
    }
    for (auto& b : betas) b = random_subset(rng, common);
    const bool unit_free = std::ranges::none_of(
        gammas, [&](IndexSet g) { return std::ranges::find(betas, g) != betas.end(); });
    if (unit_free) break;
  }
  const auto u = distinct_positive(rng, s);
  const auto v = distinct_positive(rng, l);
  MultigradedMatrix m(n, s, l);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j)
      m.set(i, j, Rational(1, u[i] + v[j]), ExponentVector::indicator(gammas[j] - betas[i], n));
  return m;
}

MatrixFile generate_test_matrix(int n, std::size_t s, std::size_t l, std::uint64_t seed) {
  if (l < s) throw InputError("generator needs l >= s");
  MultigradedMatrix m = random_uniform_rank_matrix(n, s, l, seed);
  if (!validate_multigraded(m).ok || !is_uniform_rank(m))
    throw ConsistencyError("generated matrix is not a multigraded uniform-rank matrix");
  return from_matrix(m);
}

SquarefreeIdeal random_squarefree_ideal(int n, std::size_t max_generators, std::uint64_t seed) {
  if (n < 1 || n > kMaxVariables) throw InputError("generator needs 1 <= n <= 64");
  std::mt19937_64 rng(seed);
  const IndexSet all = IndexSet::full(n);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(max_generators, 1));
  std::vector<IndexSet> gens(count(rng));
  for (auto& g : gens) {
    do g = random_subset(rng, all);
    while (g.empty());
  }
  return SquarefreeIdeal(n, std::move(gens));
}

MultigradedMatrix ideal_matrix(const SquarefreeIdeal& ideal) {
  const auto& gens = ideal.generators();
  // The zero ideal gets a single zero column.
  MultigradedMatrix m(ideal.n(), 1, std::max<std::size_t>(gens.size(), 1));
  for (std::size_t j = 0; j < gens.size(); ++j) m.set(0, j, Rational(1), ExponentVector::indicator(gens[j], ideal.n()));
  return m;
}

}  // namespace sqfree
