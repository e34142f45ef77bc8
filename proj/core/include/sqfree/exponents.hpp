#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sqfree {

/// Largest supported number of variables. IndexSet is a 64-bit mask.
inline constexpr int kMaxVariables = 64;

/// A subset of [n] = {1, ..., n}. Variables are 1-indexed; variable k
/// occupies bit k-1.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}
  IndexSet(std::initializer_list<int> members);

  static IndexSet from_members(std::span<const int> members);
  /// [n] itself.
  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(int k) const { return (mask_ >> (k - 1)) & 1U; }
  constexpr bool is_subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint_from(IndexSet other) const { return (mask_ & other.mask_) == 0; }

  constexpr IndexSet with(int k) const { return IndexSet(mask_ | (std::uint64_t{1} << (k - 1))); }
  constexpr IndexSet without(int k) const { return IndexSet(mask_ & ~(std::uint64_t{1} << (k - 1))); }

  /// 1-based rank of k among the members (k must be a member).
  constexpr int position_of(int k) const {
    return std::popcount(mask_ & ((std::uint64_t{1} << (k - 1)) - 1)) + 1;
  }
  /// Number of members strictly smaller than k.
  constexpr int count_below(int k) const {
    return std::popcount(mask_ & ((std::uint64_t{1} << (k - 1)) - 1));
  }

  std::vector<int> members() const;
  std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.mask_ | b.mask_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  /// Orders by size, then by mask; gives faces in dimension order.
  friend constexpr bool operator<(IndexSet a, IndexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask_ < b.mask_;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// A point of Z^n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int n) : coords_(static_cast<std::size_t>(n), 0) {}
  ExponentVector(std::initializer_list<int> coords) : coords_(coords) {}
  explicit ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {}

  /// The 0/1 vector with support `set`.
  static ExponentVector indicator(IndexSet set, int n);

  int n() const { return static_cast<int>(coords_.size()); }
  /// 1-based coordinate access.
  int operator[](int k) const { return coords_[static_cast<std::size_t>(k - 1)]; }
  int& operator[](int k) { return coords_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_nonnegative() const;
  bool is_squarefree() const;  // all coordinates in {0,1}
  bool is_zero() const;

  ExponentVector positive_part() const;
  ExponentVector negative_part() const;

  std::string to_string() const;  // "(1,0,-1)"

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(int k, ExponentVector a);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// Componentwise a <= b.
  friend bool dominated_by(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<int> coords_;
};

IndexSet support(const ExponentVector& a);

/// q_a: the 0/1 vector with the same support. Throws InputError on a
/// negative coordinate.
ExponentVector squarefree_part(const ExponentVector& a);

/// Componentwise maximum. Throws InputError on an empty list or mismatched n.
ExponentVector join(std::span<const ExponentVector> vectors);

/// (-1)^(r+1) where t is the r-th smallest element of L.
int sgn_single(int t, IndexSet set);

/// Product of sgn_single(w, L) over w in W.
int sgn_set(IndexSet subset, IndexSet set);

/// Parity sign of moving the elements of sigma to the end of sorted F.
int transposition_sign(IndexSet sigma, IndexSet set);

}  // namespace sqfree
