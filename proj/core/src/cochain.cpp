#include "sqfree/cochain.hpp"

#include "sqfree/errors.hpp"

namespace sqfree {

void CochainComplex::add_basis(int degree, BasisLabel label) {
  auto& level = levels_[degree];
  if (!index_.emplace(key(label), std::make_pair(degree, level.basis.size())).second)
    throw ConsistencyError("duplicate basis label " + label.face.to_string() + " in summand " +
                           std::to_string(label.summand));
  level.basis.push_back(label);
  level.images.emplace_back();
}

void CochainComplex::add_term(const BasisLabel& from, const BasisLabel& to, const Rational& coeff) {
  if (coeff.is_zero()) return;
  const auto src = index_.find(key(from));
  const auto dst = index_.find(key(to));
  if (src == index_.end())
    throw ConsistencyError("differential source " + from.face.to_string() + " is not a basis element");
  if (dst == index_.end())
    throw ConsistencyError("differential target " + to.face.to_string() + " (summand " +
                           std::to_string(to.summand) + ") is not a basis element");
  if (dst->second.first != src->second.first + 1)
    throw ConsistencyError("differential target " + to.face.to_string() + " is not one degree above its source");
  auto& slot = levels_.at(src->second.first).images[src->second.second][dst->second.second];
  slot += coeff;
}

int CochainComplex::min_degree() const { return levels_.empty() ? 0 : levels_.begin()->first; }
int CochainComplex::max_degree() const { return levels_.empty() ? -1 : levels_.rbegin()->first; }

std::size_t CochainComplex::dim(int degree) const {
  const auto it = levels_.find(degree);
  return it == levels_.end() ? 0 : it->second.basis.size();
}

const std::vector<BasisLabel>& CochainComplex::basis(int degree) const {
  static const std::vector<BasisLabel> kEmpty;
  const auto it = levels_.find(degree);
  return it == levels_.end() ? kEmpty : it->second.basis;
}

std::vector<int> CochainComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [t, level] : levels_) out.push_back(t);
  return out;
}

int CochainComplex::degree_of(const BasisLabel& label) const {
  const auto it = index_.find(key(label));
  if (it == index_.end()) throw ConsistencyError("unknown basis label " + label.face.to_string());
  return it->second.first;
}

SparseVector CochainComplex::image(const BasisLabel& label) const {
  const auto it = index_.find(key(label));
  if (it == index_.end()) throw ConsistencyError("unknown basis label " + label.face.to_string());
  SparseVector out;
  for (const auto& [idx, c] : levels_.at(it->second.first).images[it->second.second])
    if (!c.is_zero()) out.emplace_back(idx, c);
  return out;
}

RationalMatrix CochainComplex::differential(int degree) const {
  RationalMatrix m(dim(degree + 1), dim(degree));
  const auto it = levels_.find(degree);
  if (it == levels_.end()) return m;
  for (std::size_t c = 0; c < it->second.images.size(); ++c)
    for (const auto& [r, v] : it->second.images[c]) m(r, c) = v;
  return m;
}

std::size_t CochainComplex::differential_rank(int degree) const {
  const auto it = levels_.find(degree);
  if (it == levels_.end()) return 0;
  std::vector<SparseVector> columns;
  columns.reserve(it->second.images.size());
  for (const auto& img : it->second.images) {
    SparseVector col;
    for (const auto& [idx, c] : img)
      if (!c.is_zero()) col.emplace_back(idx, c);
    if (!col.empty()) columns.push_back(std::move(col));
  }
  return rank_of_rows(std::move(columns));
}

std::size_t CochainComplex::cohomology_dim(int degree) const {
  const std::size_t d = dim(degree);
  if (d == 0) return 0;
  return d - differential_rank(degree) - differential_rank(degree - 1);
}

std::map<int, std::size_t> CochainComplex::cohomology_dims() const {
  std::map<int, std::size_t> ranks;
  for (const auto& [t, level] : levels_) ranks[t] = differential_rank(t);
  std::map<int, std::size_t> out;
  for (const auto& [t, level] : levels_) {
    const auto below = ranks.find(t - 1);
    const std::size_t h = level.basis.size() - ranks[t] - (below == ranks.end() ? 0 : below->second);
    if (h != 0) out[t] = h;
  }
  return out;
}

bool CochainComplex::squares_to_zero() const {
  for (const auto& [t, level] : levels_) {
    const auto next = levels_.find(t + 1);
    if (next == levels_.end()) continue;
    for (const auto& img : level.images) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [mid, c] : img)
        for (const auto& [dst, c2] : next->second.images[mid]) acc[dst] += c * c2;
      for (const auto& [dst, v] : acc)
        if (!v.is_zero()) return false;
    }
  }
  return true;
}

long CochainComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& [t, level] : levels_) chi += (t % 2 == 0 ? 1 : -1) * static_cast<long>(level.basis.size());
  return chi;
}

long euler_characteristic(const std::map<int, std::size_t>& dims) {
  long chi = 0;
  for (const auto& [t, d] : dims) chi += (t % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  return chi;
}

}  // namespace sqfree
