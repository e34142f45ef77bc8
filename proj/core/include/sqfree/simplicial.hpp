#pragma once

#include <map>
#include <unordered_set>
#include <vector>

#include "sqfree/cochain.hpp"
#include "sqfree/exponents.hpp"
#include "sqfree/monomial_ideal.hpp"

namespace sqfree {

/// A simplicial complex with an explicit vertex set. The void complex (no
/// faces at all) is distinct from the irrelevant complex {emptyset}.
class SimplicialComplex {
 public:
  /// The void complex on the given vertex set.
  SimplicialComplex() = default;
  explicit SimplicialComplex(IndexSet vertices) : vertices_(vertices) {}

  /// Faces must be subsets of `vertices` and closed under taking subsets;
  /// throws InputError otherwise.
  SimplicialComplex(IndexSet vertices, std::vector<IndexSet> faces);
  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(IndexSet vertices, const std::vector<IndexSet>& facets);
  /// The full simplex on `vertices`.
  static SimplicialComplex simplex(IndexSet vertices);

  IndexSet vertices() const { return vertices_; }
  bool is_void() const { return faces_.empty(); }
  /// Faces sorted by (size, mask).
  const std::vector<IndexSet>& faces() const { return faces_; }
  bool contains(IndexSet face) const { return lookup_.contains(face.mask()); }
  std::vector<IndexSet> facets() const;
  /// Largest face cardinality, or -1 when void.
  int max_face_size() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
  }

 private:
  IndexSet vertices_;
  std::vector<IndexSet> faces_;
  std::unordered_set<std::uint64_t> lookup_;
};

/// Faces are supports of squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal);

/// Delta_a = { sigma in sigma_a : sigma u sigma(a - q_a) in Delta }, on the
/// vertex set sigma_a; void when a has a negative coordinate.
SimplicialComplex restrict_to_degree(const SimplicialComplex& delta, const ExponentVector& a);

/// Delta^a = { tau : tau disjoint from supp(a^-), tau u supp(a) in Delta }, on
/// the vertex set [n] \ supp(a^-).
SimplicialComplex link_type_complex(const SimplicialComplex& delta, const ExponentVector& a);

/// (V_1, V_2): vertices t outside tau with tau+t a face, resp. not a face.
std::pair<IndexSet, IndexSet> partition_vertices(const SimplicialComplex& delta, IndexSet tau);

/// Augmented cochain complex: C^j has basis the faces of size j+1 and
/// d(tau^*) = sum over t in V_1 of sgn[t, tau t] (tau t)^*. Labels use the
/// given summand index.
CochainComplex cochain_complex(const SimplicialComplex& delta, std::size_t summand = 0);

/// Nonzero reduced cohomology dimensions over Q.
std::map<int, std::size_t> reduced_cohomology_dims(const SimplicialComplex& delta);

}  // namespace sqfree
