#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/generator.hpp"
#include "sqfree/simplicial.hpp"

using namespace sqfree;

namespace {

// Reduced cohomology from scratch: faces grouped by size, coboundary sign
// (-1)^#{u in tau : u < t}.
std::map<int, std::size_t> oracle_cohomology(const SimplicialComplex& delta) {
  std::map<int, std::vector<IndexSet>> by_dim;
  for (const auto& f : delta.faces()) by_dim[f.size() - 1].push_back(f);
  auto coboundary_rank = [&](int d) -> std::size_t {
    if (!by_dim.contains(d) || !by_dim.contains(d + 1)) return 0;
    const auto& src = by_dim[d];
    const auto& dst = by_dim[d + 1];
    RationalMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t r = 0; r < dst.size(); ++r) {
        if (!src[c].is_subset_of(dst[r])) continue;
        const int t = (dst[r] - src[c]).members().front();
        int below = 0;
        for (int u : src[c].members()) below += u < t;
        m(r, c) = Rational(below % 2 ? -1 : 1);
      }
    return rank(m);
  };
  std::map<int, std::size_t> out;
  for (const auto& [d, faces] : by_dim) {
    const std::size_t h = faces.size() - coboundary_rank(d) - coboundary_rank(d - 1);
    if (h) out[d] = h;
  }
  return out;
}

SimplicialComplex random_complex(int n, std::uint64_t seed) {
  return stanley_reisner(random_squarefree_ideal(n, 4, seed));
}

}  // namespace

TEST(Simplicial, ConstructionRejectsNonComplexes) {
  EXPECT_THROW(SimplicialComplex(IndexSet{1, 2}, {IndexSet{}, IndexSet{1, 2}}), InputError);
  EXPECT_THROW(SimplicialComplex(IndexSet{1}, {IndexSet{}, IndexSet{2}}), InputError);
  const SimplicialComplex point(IndexSet{1}, {IndexSet{}, IndexSet{1}});
  EXPECT_EQ(point.facets(), (std::vector<IndexSet>{{1}}));
  EXPECT_TRUE(SimplicialComplex(IndexSet{1, 2}).is_void());
  EXPECT_EQ(SimplicialComplex(IndexSet{1, 2}).max_face_size(), -1);
}

TEST(Simplicial, StanleyReisnerExamples) {
  const auto d1 = stanley_reisner(SquarefreeIdeal(4, {{1, 2, 3}}));
  EXPECT_EQ(d1.facets(), (std::vector<IndexSet>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  const auto d2 = stanley_reisner(SquarefreeIdeal(4, {{2, 4}, {3, 4}}));
  EXPECT_EQ(d2.facets(), (std::vector<IndexSet>{{1, 4}, {1, 2, 3}}));
  EXPECT_TRUE(stanley_reisner(SquarefreeIdeal::unit(3)).is_void());
  EXPECT_EQ(stanley_reisner(SquarefreeIdeal::zero(3)), SimplicialComplex::simplex(IndexSet::full(3)));
  // x_3 is a generator: a non-vertex
  const auto d3 = stanley_reisner(SquarefreeIdeal(3, {{3}}));
  EXPECT_EQ(d3.facets(), (std::vector<IndexSet>{{1, 2}}));
  EXPECT_EQ(d3.vertices(), IndexSet::full(3));
}

TEST(Simplicial, StanleyReisnerRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto ideal = random_squarefree_ideal(n, 4, seed);
    const auto delta = stanley_reisner(ideal);
    for (const auto& sigma : fixtures::squarefree_degrees(n))
      EXPECT_NE(delta.contains(support(sigma)), ideal.contains(support(sigma)));
  }
}

TEST(Simplicial, RestrictToDegree) {
  const auto d1 = stanley_reisner(SquarefreeIdeal(4, {{1, 2, 3}}));
  EXPECT_EQ(restrict_to_degree(d1, ExponentVector{1, 1, 0, 1}), SimplicialComplex::simplex(IndexSet{1, 2, 4}));
  EXPECT_EQ(restrict_to_degree(d1, ExponentVector{2, 1, 0, 0}), SimplicialComplex::simplex(IndexSet{1, 2}));
  EXPECT_TRUE(restrict_to_degree(d1, ExponentVector{1, -1, 0, 0}).is_void());

  const auto d2 = stanley_reisner(SquarefreeIdeal(4, {{2, 4}, {3, 4}}));
  const auto r = restrict_to_degree(d2, ExponentVector{0, 0, 1, 2});
  EXPECT_EQ(r.vertices(), (IndexSet{3, 4}));
  EXPECT_EQ(r.faces(), (std::vector<IndexSet>{{}, {4}}));
  // sigma(a - q_a) not a face at all
  EXPECT_TRUE(restrict_to_degree(d2, ExponentVector{0, 2, 0, 2}).is_void());
}

TEST(Simplicial, LinkTypeComplex) {
  const auto d2 = stanley_reisner(SquarefreeIdeal(4, {{2, 4}, {3, 4}}));
  const auto a = link_type_complex(d2, ExponentVector{0, 0, -1, 0});
  EXPECT_EQ(a.vertices(), (IndexSet{1, 2, 4}));
  EXPECT_EQ(a.facets(), (std::vector<IndexSet>{{1, 2}}));
  const auto b = link_type_complex(d2, ExponentVector{1, 0, -1, 0});
  EXPECT_EQ(b.facets(), (std::vector<IndexSet>{{1, 2}}));
  EXPECT_TRUE(link_type_complex(d2, ExponentVector{0, -1, 0, -1}).is_void());
  EXPECT_EQ(link_type_complex(d2, ExponentVector(4)), d2);
}

TEST(Simplicial, PartitionVertices) {
  const auto d2 = stanley_reisner(SquarefreeIdeal(4, {{2, 4}, {3, 4}}));
  const auto [v1, v2] = partition_vertices(d2, IndexSet{4});
  EXPECT_EQ(v1, (IndexSet{1}));
  EXPECT_EQ(v2, (IndexSet{2, 3}));
  const auto [w1, w2] = partition_vertices(d2, IndexSet{1});
  EXPECT_EQ(w1, (IndexSet{2, 3, 4}));
  EXPECT_TRUE(w2.empty());
}

TEST(Cochain, TriangleBoundary) {
  const auto circle = SimplicialComplex::from_facets(IndexSet{1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(reduced_cohomology_dims(circle), (std::map<int, std::size_t>{{1, 1}}));
  const auto c = cochain_complex(circle);
  EXPECT_EQ(c.min_degree(), -1);
  EXPECT_EQ(c.dim(0), 3U);
  EXPECT_EQ(c.dim(1), 3U);
  // d({1}*) = -{1,2}* - {1,3}*
  const auto d0 = c.differential(0);
  const auto& b0 = c.basis(0);
  const auto& b1 = c.basis(1);
  for (std::size_t col = 0; col < b0.size(); ++col)
    for (std::size_t row = 0; row < b1.size(); ++row)
      if (b0[col].face == IndexSet{1} && b1[row].face.contains(1)) EXPECT_EQ(d0(row, col), Rational(-1));
}

TEST(Cochain, SpecialComplexes) {
  EXPECT_TRUE(reduced_cohomology_dims(SimplicialComplex(IndexSet{1, 2})).empty());
  const SimplicialComplex irrelevant(IndexSet{1, 2}, {IndexSet{}});
  EXPECT_EQ(reduced_cohomology_dims(irrelevant), (std::map<int, std::size_t>{{-1, 1}}));
  const auto two_points = SimplicialComplex::from_facets(IndexSet{1, 2}, {{1}, {2}});
  EXPECT_EQ(reduced_cohomology_dims(two_points), (std::map<int, std::size_t>{{0, 1}}));
  EXPECT_TRUE(reduced_cohomology_dims(SimplicialComplex::simplex(IndexSet{1, 2, 3})).empty());
  const auto sphere = SimplicialComplex::from_facets(IndexSet::full(4), {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  EXPECT_EQ(reduced_cohomology_dims(sphere), (std::map<int, std::size_t>{{2, 1}}));
}

TEST(Cochain, AgreesWithOracleOnRandomComplexes) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto delta = random_complex(n, seed);
    const auto c = cochain_complex(delta);
    EXPECT_TRUE(c.squares_to_zero());
    const auto dims = reduced_cohomology_dims(delta);
    EXPECT_EQ(dims, oracle_cohomology(delta)) << "seed " << seed;
    EXPECT_EQ(euler_characteristic(dims), c.euler_characteristic());
  }
}

TEST(Cochain, ConesAreAcyclic) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto base = random_complex(n, seed);
    if (base.is_void()) continue;
    std::vector<IndexSet> facets;
    for (const auto& f : base.facets()) facets.push_back(f.with(n + 1));
    const auto cone = SimplicialComplex::from_facets(IndexSet::full(n + 1), facets);
    EXPECT_TRUE(reduced_cohomology_dims(cone).empty()) << "seed " << seed;
  }
}
