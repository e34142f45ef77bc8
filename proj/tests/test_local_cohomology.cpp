#include <gtest/gtest.h>

#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/generator.hpp"
#include "sqfree/local_cohomology.hpp"

using namespace sqfree;
using fixtures::example_module;

namespace {

using Dims = std::map<int, std::size_t>;

ExponentVector random_degree(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  ExponentVector a(n);
  for (int k = 1; k <= n; ++k) a[k] = coord(rng);
  return a;
}

}  // namespace

TEST(LocalCohomology, NegativeCornerExample) {
  const ExponentVector alpha{0, -1, -1, 0};
  const auto c = build_L_complex(example_module(), alpha);
  EXPECT_EQ(c.shifted[0], (ExponentVector{0, -1, -1, -1}));
  EXPECT_EQ(c.shifted[1], (ExponentVector{-1, -1, -1, 0}));
  EXPECT_EQ(c.shifts, (std::vector<int>{0, 0}));
  EXPECT_EQ(c.assembled.dim(-1), 2U);
  EXPECT_EQ(local_cohomology_dims(example_module(), alpha), (Dims{{3, 2}}));
}

TEST(LocalCohomology, OriginExample) {
  const auto c = build_L_complex(example_module(), ExponentVector(4));
  EXPECT_EQ(c.negative_supports, (std::vector<IndexSet>{{4}, {1}}));
  EXPECT_EQ(c.summands[0].facets(), (std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(c.summands[1].facets(), (std::vector<IndexSet>{{4}, {2, 3}}));
  EXPECT_EQ(c.assembled.dim(-1), 2U);
  EXPECT_EQ(c.assembled.dim(0), 6U);
  EXPECT_EQ(c.assembled.dim(1), 4U);
  EXPECT_TRUE(c.assembled.cohomology_dims().empty());

  // d0({2}*) in the second summand: {1,2}* in the first minus {2,3}* in the second
  const auto image = c.assembled.image({1, IndexSet{2}});
  const auto& targets = c.assembled.basis(1);
  ASSERT_EQ(image.size(), 2U);
  for (const auto& [idx, coeff] : image) {
    const auto& t = targets[idx];
    if (t.summand == 0) {
      EXPECT_EQ(t.face, (IndexSet{1, 2}));
      EXPECT_EQ(coeff, Rational(1));
    } else {
      EXPECT_EQ(t.face, (IndexSet{2, 3}));
      EXPECT_EQ(coeff, Rational(-1));
    }
  }
}

TEST(LocalCohomology, PatternRepresentative) {
  EXPECT_EQ(pattern_representative(IndexSet{1}, IndexSet{3}, 4), (ExponentVector{1, 0, -1, 0}));
  EXPECT_EQ(pattern_representative(IndexSet{1}, IndexSet{3}, 4, 2), (ExponentVector{2, 0, -2, 0}));
  EXPECT_THROW(pattern_representative(IndexSet{1}, IndexSet{1}, 4), InputError);
}

TEST(LocalCohomology, ExampleSweep) {
  const auto sweep = pattern_sweep(example_module());
  ASSERT_EQ(sweep.size(), 81U);
  EXPECT_TRUE(sweep[0].plus.empty() && sweep[0].minus.empty());
  EXPECT_EQ(sweep[1].plus, (IndexSet{1}));
  EXPECT_EQ(sweep[2].minus, (IndexSet{1}));
  for (const auto& p : sweep) {
    EXPECT_TRUE(p.stable);
    for (const auto& [i, d] : p.dims) EXPECT_EQ(i, 3);
    const auto cech = cech_oracle(example_module(), pattern_representative(p.plus, p.minus, 4));
    EXPECT_EQ(p.dims, cech.dims);
  }
}

TEST(LocalCohomology, CechOnGeneratedInstances) {
  for (const auto& inst : fixtures::generated_instances(25)) {
    if (inst.n > 5) continue;
    const auto m = SquarefreeModule::canonical(inst.matrix);
    for (const auto& alpha : fixtures::pattern_degrees(inst.n)) {
      const auto c = build_L_complex(m, alpha);
      const auto cech = cech_oracle(m, alpha);
      EXPECT_TRUE(cech.squares_to_zero);
      EXPECT_EQ(local_cohomology_dims(m, alpha), cech.dims) << "seed " << inst.seed << " " << alpha.to_string();
      EXPECT_EQ(euler_characteristic(cech.dims), cech.euler_characteristic);
      EXPECT_EQ(c.assembled.euler_characteristic() * ((c.offset + 1) % 2 ? -1 : 1), cech.euler_characteristic);
    }
  }
}

TEST(LocalCohomology, CechAtArbitraryDegrees) {
  std::mt19937_64 rng(11);
  for (const auto& inst : fixtures::generated_instances(20, 100)) {
    const auto m = SquarefreeModule::canonical(inst.matrix);
    for (int trial = 0; trial < 10; ++trial) {
      const auto alpha = random_degree(inst.n, rng);
      EXPECT_EQ(local_cohomology_dims(m, alpha), cech_oracle(m, alpha).dims) << alpha.to_string();
    }
  }
}

// S itself: only H^n, in degree (-1,...,-1) among the patterns.
TEST(LocalCohomology, PolynomialRing) {
  const auto s = SquarefreeModule::canonical(ideal_matrix(SquarefreeIdeal::zero(3)));
  for (const auto& alpha : fixtures::pattern_degrees(3)) {
    const bool all_negative = alpha == ExponentVector{-1, -1, -1};
    EXPECT_EQ(local_cohomology_dims(s, alpha), (all_negative ? Dims{{3, 1}} : Dims{})) << alpha.to_string();
  }
}

// Report only: does the unlocalized subscript keep d^2 = 0 and the Cech dims?
TEST(LocalCohomology, LiteralSubscriptExperiment) {
  std::size_t complexes = 0;
  std::size_t with_disagreement = 0;
  std::size_t broken = 0;
  std::size_t wrong_dims = 0;
  for (const auto& inst : fixtures::generated_instances(25)) {
    if (inst.n > 5) continue;
    const auto m = SquarefreeModule::canonical(inst.matrix);
    for (const auto& alpha : fixtures::pattern_degrees(inst.n)) {
      ++complexes;
      const auto localized = build_L_complex(m, alpha);
      if (localized.disagreements.empty()) continue;
      ++with_disagreement;
      try {
        const auto literal = build_L_complex(m, alpha, SubscriptRule::Literal);
        if (literal.assembled.cohomology_dims() != localized.assembled.cohomology_dims()) ++wrong_dims;
      } catch (const ConsistencyError&) {
        ++broken;
      }
    }
  }
  std::cout << "[ report ] literal subscript: " << complexes << " complexes, " << with_disagreement
            << " with disagreeing terms, " << broken << " fail d^2 = 0, " << wrong_dims << " give wrong dims\n";
  RecordProperty("literal_broken", std::to_string(broken));
  RecordProperty("literal_wrong_dims", std::to_string(wrong_dims));
  const ExponentVector alpha{1, 1, 0, 0};
  EXPECT_EQ(build_L_complex(example_module(), alpha).disagreements.size(), 4U);
  EXPECT_THROW(build_L_complex(example_module(), alpha, SubscriptRule::Literal), ConsistencyError);
}

TEST(DepthDim, Example) {
  const auto r = depth_and_dim_report(example_module());
  EXPECT_EQ(r.krull_dimension, 3);
  EXPECT_EQ(r.min_index, 3);
  EXPECT_EQ(r.max_index, 3);
  EXPECT_EQ(r.projective_dimension, 1);
  EXPECT_EQ(r.n_minus_pd, 3);
}

TEST(DepthDim, GeneratedInstances) {
  for (const auto& inst : fixtures::generated_instances(30)) {
    if (inst.n > 5) continue;
    const auto m = SquarefreeModule::canonical(inst.matrix);
    const auto r = depth_and_dim_report(m);
    if (r.krull_dimension < 0) {
      EXPECT_FALSE(r.max_index.has_value());
      continue;
    }
    EXPECT_EQ(r.max_index, r.krull_dimension) << "seed " << inst.seed;
    EXPECT_EQ(r.min_index, r.n_minus_pd) << "seed " << inst.seed;
  }
}
