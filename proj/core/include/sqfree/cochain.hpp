#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sqfree/exponents.hpp"
#include "sqfree/linalg.hpp"

namespace sqfree {

/// A basis element tau^* of one summand of an assembled complex.
struct BasisLabel {
  std::size_t summand = 0;
  IndexSet face;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
    if (a.summand != b.summand) return a.summand <=> b.summand;
    if (a.face == b.face) return std::strong_ordering::equal;
    return a.face < b.face ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

/// Finite cochain complex over Q with labeled bases in arbitrary (possibly
/// negative) integer degrees. Differentials d^t : C^t -> C^{t+1} are stored
/// column-wise: the image of each basis element as a sparse vector.
class CochainComplex {
 public:
  CochainComplex() = default;

  /// Registers a basis element in degree t. Labels must be unique.
  void add_basis(int degree, BasisLabel label);
  /// Adds coeff * to to d(from). Throws ConsistencyError if `to` does not
  /// live one degree above `from`.
  void add_term(const BasisLabel& from, const BasisLabel& to, const Rational& coeff);

  bool empty() const { return levels_.empty(); }
  int min_degree() const;
  int max_degree() const;
  std::size_t dim(int degree) const;
  const std::vector<BasisLabel>& basis(int degree) const;
  std::vector<int> degrees() const;

  bool contains(const BasisLabel& label) const { return index_.contains(key(label)); }
  /// Degree of a registered label.
  int degree_of(const BasisLabel& label) const;

  /// d^t as a dense dim(t+1) x dim(t) matrix.
  RationalMatrix differential(int degree) const;
  /// Image of one basis element, as (target index in C^{t+1}, coefficient).
  SparseVector image(const BasisLabel& label) const;

  std::size_t differential_rank(int degree) const;
  /// Nonzero cohomology dimensions only.
  std::map<int, std::size_t> cohomology_dims() const;
  /// Cohomology dimension at a single degree.
  std::size_t cohomology_dim(int degree) const;

  bool squares_to_zero() const;
  long euler_characteristic() const;

 private:
  struct Level {
    std::vector<BasisLabel> basis;
    std::vector<std::map<std::size_t, Rational>> images;
  };
  using Key = std::pair<std::size_t, std::uint64_t>;
  static Key key(const BasisLabel& l) { return {l.summand, l.face.mask()}; }

  std::map<int, Level> levels_;
  std::map<Key, std::pair<int, std::size_t>> index_;
};

/// Euler characteristic of a cohomology dimension table.
long euler_characteristic(const std::map<int, std::size_t>& dims);

}  // namespace sqfree
