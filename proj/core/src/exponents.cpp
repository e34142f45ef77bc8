#include "sqfree/exponents.hpp"

#include <algorithm>

#include "sqfree/errors.hpp"

namespace sqfree {

IndexSet::IndexSet(std::initializer_list<int> members)
    : IndexSet(from_members(std::span<const int>(members.begin(), members.size()))) {}

IndexSet IndexSet::from_members(std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int k : members) {
    if (k < 1 || k > kMaxVariables) throw InputError("index out of range: " + std::to_string(k));
    mask |= std::uint64_t{1} << (k - 1);
  }
  return IndexSet(mask);
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int k : members()) {
    if (!first) s += ',';
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

ExponentVector ExponentVector::indicator(IndexSet set, int n) {
  ExponentVector v(n);
  for (int k : set.members()) v[k] = 1;
  return v;
}

bool ExponentVector::is_nonnegative() const {
  return std::ranges::all_of(coords_, [](int c) { return c >= 0; });
}

bool ExponentVector::is_squarefree() const {
  return std::ranges::all_of(coords_, [](int c) { return c == 0 || c == 1; });
}

bool ExponentVector::is_zero() const {
  return std::ranges::all_of(coords_, [](int c) { return c == 0; });
}

ExponentVector ExponentVector::positive_part() const {
  ExponentVector v = *this;
  for (int& c : v.coords_) c = std::max(c, 0);
  return v;
}

ExponentVector ExponentVector::negative_part() const {
  ExponentVector v = *this;
  for (int& c : v.coords_) c = std::max(-c, 0);
  return v;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.n() != n()) throw InputError("exponent vectors of different length");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.n() != n()) throw InputError("exponent vectors of different length");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

ExponentVector operator*(int k, ExponentVector a) {
  for (int& c : a.coords_) c *= k;
  return a;
}

bool dominated_by(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.coords_.size(); ++k)
    if (a.coords_[k] > b.coords_[k]) return false;
  return true;
}

IndexSet support(const ExponentVector& a) {
  std::uint64_t mask = 0;
  for (int k = 1; k <= a.n(); ++k)
    if (a[k] != 0) mask |= std::uint64_t{1} << (k - 1);
  return IndexSet(mask);
}

ExponentVector squarefree_part(const ExponentVector& a) {
  if (!a.is_nonnegative()) throw InputError("squarefree part of " + a.to_string() + " is undefined");
  return ExponentVector::indicator(support(a), a.n());
}

ExponentVector join(std::span<const ExponentVector> vectors) {
  if (vectors.empty()) throw InputError("join of an empty list");
  ExponentVector out = vectors.front();
  for (const auto& v : vectors.subspan(1)) {
    if (v.n() != out.n()) throw InputError("join of vectors of different length");
    for (int k = 1; k <= out.n(); ++k) out[k] = std::max(out[k], v[k]);
  }
  return out;
}

int sgn_single(int t, IndexSet set) {
  if (!set.contains(t))
    throw InputError("sgn: " + std::to_string(t) + " is not in " + set.to_string());
  return set.position_of(t) % 2 == 1 ? 1 : -1;
}

int sgn_set(IndexSet subset, IndexSet set) {
  if (!subset.is_subset_of(set))
    throw InputError("sgn: " + subset.to_string() + " is not a subset of " + set.to_string());
  int sign = 1;
  for (int w : subset.members()) sign *= sgn_single(w, set);
  return sign;
}

int transposition_sign(IndexSet sigma, IndexSet set) {
  if (!sigma.is_subset_of(set))
    throw InputError("t: " + sigma.to_string() + " is not a subset of " + set.to_string());
  // Each pair (a in sigma, b in F \ sigma, a < b) is one inversion.
  int inversions = 0;
  const IndexSet rest = set - sigma;
  for (int a : sigma.members()) inversions += rest.size() - rest.count_below(a);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace sqfree
