#include "sqfree/monomial_ideal.hpp"

#include <algorithm>

#include "sqfree/errors.hpp"

namespace sqfree {

std::vector<IndexSet> minimalize(std::vector<IndexSet> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<IndexSet> out;
  for (IndexSet g : generators) {
    // Sorted by size, so any divisor of g is already in `out`.
    if (std::ranges::none_of(out, [g](IndexSet h) { return h.is_subset_of(g); })) out.push_back(g);
  }
  return out;
}

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<IndexSet> generators)
    : n_(n), generators_(minimalize(std::move(generators))) {
  const IndexSet all = IndexSet::full(n);
  for (IndexSet g : generators_)
    if (!g.is_subset_of(all)) throw InputError("ideal generator " + g.to_string() + " uses a variable beyond n");
}

bool SquarefreeIdeal::contains(IndexSet monomial) const {
  return std::ranges::any_of(generators_, [monomial](IndexSet g) { return g.is_subset_of(monomial); });
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n() != b.n()) throw InputError("intersecting ideals in different rings");
  std::vector<IndexSet> lcms;
  for (IndexSet g : a.generators())
    for (IndexSet h : b.generators()) lcms.push_back(g | h);
  return SquarefreeIdeal(a.n(), std::move(lcms));
}

}  // namespace sqfree
