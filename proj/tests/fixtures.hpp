#pragma once

// Shared instances for the unit tests and the acceptance run.

#include <cstdint>
#include <random>
#include <vector>

#include "sqfree/generator.hpp"
#include "sqfree/reduction.hpp"

namespace sqfree::fixtures {

// A = [[xy, xz], [wy, 2wz]] with variables x, y, z, w = 1..4.
inline MultigradedMatrix example_matrix() {
  MultigradedMatrix a(4, 2, 2);
  a.set(0, 0, Rational(1), {1, 1, 0, 0});
  a.set(1, 0, Rational(1), {0, 1, 0, 1});
  a.set(0, 1, Rational(1), {1, 0, 1, 0});
  a.set(1, 1, Rational(2), {0, 0, 1, 1});
  return a;
}

inline const SquarefreeModule& example_module() {
  static const SquarefreeModule module = SquarefreeModule::canonical(example_matrix());
  return module;
}

// [[x, y], [0, x]] over k[x, y].
inline MultigradedMatrix non_squarefree_matrix() {
  MultigradedMatrix a(2, 2, 2);
  a.set(0, 0, Rational(1), {1, 0});
  a.set(0, 1, Rational(1), {0, 1});
  a.set(1, 1, Rational(1), {1, 0});
  return a;
}

struct Instance {
  int n;
  std::size_t s;
  std::size_t l;
  std::uint64_t seed;
  MultigradedMatrix matrix;
};

// Uniform-rank instances with 2 <= n <= 6, s <= 3, s <= l <= 4.
inline std::vector<Instance> generated_instances(std::size_t count, std::uint64_t first_seed = 1) {
  std::vector<Instance> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const std::size_t s = 1 + seed % 3;
    const std::size_t l = s + (seed / 3) % (5 - s);
    out.push_back({n, s, l, seed, to_matrix(generate_test_matrix(n, s, l, seed))});
  }
  return out;
}

inline std::vector<ExponentVector> squarefree_degrees(int n) {
  std::vector<ExponentVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    out.push_back(ExponentVector::indicator(IndexSet(mask), n));
  return out;
}

// All of {0, ..., top}^n.
inline std::vector<ExponentVector> box(int n, int top) {
  std::vector<ExponentVector> out;
  ExponentVector a(n);
  while (true) {
    out.push_back(a);
    int k = 1;
    while (k <= n && a[k] == top) a[k++] = 0;
    if (k > n) break;
    ++a[k];
  }
  return out;
}

// `count` degrees in {0,1,2}^n with some coordinate equal to 2.
inline std::vector<ExponentVector> random_non_squarefree(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 2);
  std::vector<ExponentVector> out;
  while (out.size() < count) {
    ExponentVector a(n);
    for (int k = 1; k <= n; ++k) a[k] = coord(rng);
    if (!a.is_squarefree()) out.push_back(a);
  }
  return out;
}

// Every alpha in {-1,0,1}^n.
inline std::vector<ExponentVector> pattern_degrees(int n) {
  std::vector<ExponentVector> out;
  for (const auto& a : box(n, 2)) {
    ExponentVector b(n);
    for (int k = 1; k <= n; ++k) b[k] = a[k] == 2 ? -1 : a[k];
    out.push_back(b);
  }
  return out;
}

}  // namespace sqfree::fixtures
