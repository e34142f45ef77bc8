#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sqfree/betti.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/generator.hpp"

using namespace sqfree;
using fixtures::example_module;

namespace {

// Full subcomplex on the vertex set W.
SimplicialComplex induced(const SimplicialComplex& delta, IndexSet w) {
  std::vector<IndexSet> faces;
  for (const auto& f : delta.faces())
    if (f.is_subset_of(w)) faces.push_back(f);
  return SimplicialComplex(w, faces);
}

// b_{i,W}(S/I) = dim H~^{|W|-i-1}(Delta|_W).
std::size_t hochster(const SquarefreeIdeal& ideal, int i, IndexSet w) {
  const auto dims = reduced_cohomology_dims(induced(stanley_reisner(ideal), w));
  const auto it = dims.find(w.size() - i - 1);
  return it == dims.end() ? 0 : it->second;
}

}  // namespace

TEST(Betti, ShiftedFace) {
  const auto& m = example_module();
  EXPECT_EQ(shifted_face(m, IndexSet{3, 4}, 1, 0), (IndexSet{1, 3}));
  EXPECT_EQ(shifted_face(m, IndexSet{}, 1, 0), (IndexSet{1}));
}

TEST(Betti, ChiExample) {
  const auto terms = chi_map(example_module(), ExponentVector{1, 1, 1, 1}, 1, IndexSet{3}, 4);
  ASSERT_EQ(terms.size(), 1U);
  EXPECT_EQ(terms[0].summand, 0U);
  EXPECT_EQ(terms[0].face, (IndexSet{1, 3}));
  EXPECT_EQ(terms[0].coefficient, Rational(-1, 2));
  // 2 is in V_1 of {3}
  EXPECT_THROW(chi_map(example_module(), ExponentVector{1, 1, 1, 1}, 1, IndexSet{3}, 2), InputError);
}

TEST(Betti, ComplexShape) {
  const auto c = build_betti_complex(example_module(), ExponentVector{1, 1, 1, 1});
  EXPECT_EQ(c.shifts, (std::vector<int>{0, 0}));
  EXPECT_EQ(c.offset, 3);
  EXPECT_EQ(c.shifted[1], (ExponentVector{0, 1, 1, 1}));
  EXPECT_TRUE(c.assembled.squares_to_zero());

  const auto g = build_betti_complex(example_module(), ExponentVector{1, 0, 1, 1});
  EXPECT_EQ(g.shifts, (std::vector<int>{0, 0}));
  EXPECT_EQ(g.offset, 2);
  EXPECT_TRUE(g.assembled.squares_to_zero());
}

TEST(Betti, ExampleTable) {
  const std::vector<BettiEntry> expected{{0, ExponentVector{0, 0, 0, 1}, 1},
                                         {0, ExponentVector{1, 0, 0, 0}, 1},
                                         {1, ExponentVector{1, 0, 1, 1}, 1},
                                         {1, ExponentVector{1, 1, 0, 1}, 1}};
  EXPECT_EQ(betti_table(example_module()), expected);
  EXPECT_EQ(betti_number(example_module(), 1, ExponentVector{1, 0, 1, 1}), 1U);
  EXPECT_EQ(betti_number(example_module(), 2, ExponentVector{1, 1, 1, 1}), 0U);
}

TEST(Betti, QuotientByTwoVariables) {
  const auto m = SquarefreeModule::canonical(ideal_matrix(SquarefreeIdeal(2, {{1}, {2}})));
  const std::vector<BettiEntry> expected{{0, ExponentVector{0, 0}, 1},
                                         {1, ExponentVector{0, 1}, 1},
                                         {1, ExponentVector{1, 0}, 1},
                                         {2, ExponentVector{1, 1}, 1}};
  EXPECT_EQ(betti_table(m), expected);
}

TEST(Betti, KoszulOracleOnExample) {
  for (const auto& alpha : fixtures::box(4, 2)) {
    const auto k = koszul_oracle(example_module(), alpha);
    EXPECT_TRUE(k.squares_to_zero);
    EXPECT_EQ(betti_numbers(example_module(), alpha), k.betti) << alpha.to_string();
  }
  // dim (M (x) K_i)_alpha = sum over |L| = i of dim M_{alpha - L}
  for (const auto& alpha : fixtures::squarefree_degrees(4)) {
    std::vector<std::size_t> expected(5);
    for (const auto& l : fixtures::squarefree_degrees(4)) {
      const auto rest = alpha - l;
      if (rest.is_nonnegative()) expected[static_cast<std::size_t>(support(l).size())] += example_module().dim_at(rest);
    }
    EXPECT_EQ(koszul_oracle(example_module(), alpha).component_dims, expected);
  }
}

TEST(Betti, KoszulOracleOnGeneratedInstances) {
  for (const auto& inst : fixtures::generated_instances(40)) {
    const auto m = SquarefreeModule::canonical(inst.matrix);
    auto degrees = fixtures::squarefree_degrees(inst.n);
    const auto extra = fixtures::random_non_squarefree(inst.n, 5, inst.seed);
    degrees.insert(degrees.end(), extra.begin(), extra.end());
    for (const auto& alpha : degrees) {
      const auto c = build_betti_complex(m, alpha);
      const auto k = koszul_oracle(m, alpha);
      EXPECT_TRUE(c.assembled.squares_to_zero());
      EXPECT_EQ(betti_numbers(m, alpha), k.betti) << "seed " << inst.seed << " " << alpha.to_string();
    }
  }
}

TEST(Betti, HochsterOnRandomIdeals) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto ideal = random_squarefree_ideal(n, 4, seed);
    if (ideal.is_zero() || ideal.is_unit()) continue;
    const auto m = SquarefreeModule::canonical(ideal_matrix(ideal));
    for (const auto& alpha : fixtures::squarefree_degrees(n)) {
      const auto b = betti_numbers(m, alpha);
      for (int i = 0; i <= n; ++i)
        EXPECT_EQ(b[static_cast<std::size_t>(i)], hochster(ideal, i, support(alpha)))
            << "seed " << seed << " i " << i << " " << alpha.to_string();
    }
  }
}

TEST(Betti, ZeroDegreeGeneratorsOfMinimalPresentations) {
  for (const auto& inst : fixtures::generated_instances(60)) {
    if (!is_minimal_presentation(inst.matrix)) continue;
    const auto m = SquarefreeModule::canonical(inst.matrix);
    std::size_t b0 = 0;
    for (const auto& e : betti_table(m))
      if (e.i == 0) b0 += e.value;
    EXPECT_EQ(b0, inst.s) << "seed " << inst.seed;
  }
}

TEST(Betti, MinimalPresentation) {
  EXPECT_TRUE(is_minimal_presentation(fixtures::example_matrix()));
  MultigradedMatrix unit(2, 1, 1);
  unit.set(0, 0, Rational(1), ExponentVector(2));
  EXPECT_FALSE(is_minimal_presentation(unit));
}
