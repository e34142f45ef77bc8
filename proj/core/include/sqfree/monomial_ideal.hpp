#pragma once

#include <vector>

#include "sqfree/exponents.hpp"

namespace sqfree {

/// A squarefree monomial ideal of k[x_1..x_n], kept as its minimal
/// generators. A generator is the support of a squarefree monomial.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  /// The ideal generated by `generators` (minimalized on construction).
  SquarefreeIdeal(int n, std::vector<IndexSet> generators);

  static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }
  static SquarefreeIdeal unit(int n) { return SquarefreeIdeal(n, {IndexSet{}}); }

  int n() const { return n_; }
  /// Sorted by (size, mask).
  const std::vector<IndexSet>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().empty(); }

  /// Membership of the squarefree monomial x^underline(support).
  bool contains(IndexSet monomial) const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<IndexSet> generators_;
};

/// Drops every generator divisible by another one; sorts the rest.
std::vector<IndexSet> minimalize(std::vector<IndexSet> generators);

/// Intersection via pairwise lcm (union of supports), then minimalization.
SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

}  // namespace sqfree
