#include "sqfree/simplicial.hpp"

#include <algorithm>

#include "sqfree/errors.hpp"

namespace sqfree {

SimplicialComplex::SimplicialComplex(IndexSet vertices, std::vector<IndexSet> faces) : vertices_(vertices) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  faces_ = std::move(faces);
  for (IndexSet f : faces_) {
    if (!f.is_subset_of(vertices_)) throw InputError("face " + f.to_string() + " uses a vertex outside the vertex set");
    lookup_.insert(f.mask());
  }
  for (IndexSet f : faces_)
    for (int v : f.members())
      if (!contains(f.without(v))) throw InputError("face family is not closed under subsets at " + f.to_string());
}

SimplicialComplex SimplicialComplex::from_facets(IndexSet vertices, const std::vector<IndexSet>& facets) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<IndexSet> faces;
  for (IndexSet facet : facets) {
    // Enumerate all submasks of the facet.
    const std::uint64_t m = facet.mask();
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      if (seen.insert(sub).second) faces.emplace_back(sub);
      if (sub == 0) break;
    }
  }
  return SimplicialComplex(vertices, std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(IndexSet vertices) { return from_facets(vertices, {vertices}); }

std::vector<IndexSet> SimplicialComplex::facets() const {
  std::vector<IndexSet> out;
  for (IndexSet f : faces_) {
    const IndexSet rest = vertices_ - f;
    if (std::ranges::none_of(rest.members(), [&](int v) { return contains(f.with(v)); })) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::max_face_size() const { return faces_.empty() ? -1 : faces_.back().size(); }

SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  const IndexSet all = IndexSet::full(ideal.n());
  std::vector<IndexSet> faces;
  const std::uint64_t m = all.mask();
  for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
    if (!ideal.contains(IndexSet(sub))) faces.emplace_back(sub);
    if (sub == 0) break;
  }
  return SimplicialComplex(all, std::move(faces));
}

SimplicialComplex restrict_to_degree(const SimplicialComplex& delta, const ExponentVector& a) {
  if (!a.is_nonnegative()) return SimplicialComplex{};
  const IndexSet sa = support(a);
  const IndexSet extra = support(a - squarefree_part(a));
  std::vector<IndexSet> faces;
  const std::uint64_t m = sa.mask();
  for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
    if (delta.contains(IndexSet(sub) | extra)) faces.emplace_back(sub);
    if (sub == 0) break;
  }
  return SimplicialComplex(sa, std::move(faces));
}

SimplicialComplex link_type_complex(const SimplicialComplex& delta, const ExponentVector& a) {
  const IndexSet neg = support(a.negative_part());
  const IndexSet sa = support(a);
  const IndexSet vertices = IndexSet::full(a.n()) - neg;
  std::vector<IndexSet> faces;
  const std::uint64_t m = vertices.mask();
  for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
    if (delta.contains(IndexSet(sub) | sa)) faces.emplace_back(sub);
    if (sub == 0) break;
  }
  return SimplicialComplex(vertices, std::move(faces));
}

std::pair<IndexSet, IndexSet> partition_vertices(const SimplicialComplex& delta, IndexSet tau) {
  if (!delta.contains(tau)) throw InputError(tau.to_string() + " is not a face");
  IndexSet link;
  IndexSet rest;
  for (int t : (delta.vertices() - tau).members()) {
    if (delta.contains(tau.with(t)))
      link = link.with(t);
    else
      rest = rest.with(t);
  }
  return {link, rest};
}

CochainComplex cochain_complex(const SimplicialComplex& delta, std::size_t summand) {
  CochainComplex c;
  for (IndexSet f : delta.faces()) c.add_basis(f.size() - 1, {summand, f});
  for (IndexSet f : delta.faces()) {
    const auto [link, rest] = partition_vertices(delta, f);
    for (int t : link.members()) c.add_term({summand, f}, {summand, f.with(t)}, sgn_single(t, f.with(t)));
  }
  return c;
}

std::map<int, std::size_t> reduced_cohomology_dims(const SimplicialComplex& delta) {
  return cochain_complex(delta).cohomology_dims();
}

}  // namespace sqfree
