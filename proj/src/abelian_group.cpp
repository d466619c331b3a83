#include "arithmat/abelian_group.hpp"

#include <stdexcept>

namespace arithmat {

GroupElement::GroupElement(std::initializer_list<long long> c) {
  coords.reserve(c.size());
  for (long long x : c) coords.emplace_back(x);
}

FgGroup::FgGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("torsion coefficients must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw std::invalid_argument("torsion coefficients must form a divisibility chain");
  }
}

Integer FgGroup::torsion_order() const {
  Integer order = 1;
  for (const Integer& d : torsion_) order *= d;
  return order;
}

GroupElement FgGroup::canonical(const GroupElement& e) const {
  if (!contains(e)) throw std::invalid_argument("element has wrong number of coordinates");
  GroupElement out = e;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    out.coords[free_rank_ + i] = mod_floor(out.coords[free_rank_ + i], torsion_[i]);
  return out;
}

IntMatrix FgGroup::relation_block() const {
  IntMatrix q(dimension(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) q(free_rank_ + i, i) = torsion_[i];
  return q;
}

namespace {

IntMatrix lift_matrix(const FgGroup& g, std::span<const GroupElement> a) {
  IntMatrix m(g.dimension(), a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!g.contains(a[j])) throw std::invalid_argument("element does not belong to the group");
    for (std::size_t i = 0; i < g.dimension(); ++i) m(i, j) = a[j].coords[i];
  }
  return m;
}

}  // namespace

SubgroupData subgroup_data(const FgGroup& g, std::span<const GroupElement> a) {
  IntMatrix lifted = lift_matrix(g, a).hconcat(g.relation_block());
  SubgroupData out;
  if (lifted.empty()) return out;
  SnfResult s = snf(lifted);
  out.rank = s.rank() - g.torsion_count();
  out.multiplicity = 1;
  for (const Integer& d : s.d)
    if (d != 0) out.multiplicity *= d;
  return out;
}

GroupElement ElementMap::operator()(const GroupElement& e) const {
  GroupElement out(projection * e.coords);
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] != 0) out.coords[i] = mod_floor(out.coords[i], moduli[i]);
  return out;
}

QuotientPresentation quotient_presentation(const FgGroup& g, std::span<const GroupElement> h) {
  const std::size_t n = g.dimension();
  IntMatrix relations = lift_matrix(g, h).hconcat(g.relation_block());
  SnfResult s = snf(relations);
  // Row i of u maps Z^n onto the i-th cyclic factor Z/d_i (or Z beyond the rank).
  const std::size_t rho = s.rank();
  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < rho; ++i)
    if (s.d[i] > 1) {
      torsion_rows.push_back(i);
      torsion.push_back(s.d[i]);
    }
  for (std::size_t i = rho; i < n; ++i) free_rows.push_back(i);

  QuotientPresentation out;
  out.group = FgGroup(free_rows.size(), torsion);
  const std::size_t dim = out.group.dimension();
  out.map.projection = IntMatrix(dim, n);
  out.map.moduli.assign(dim, Integer(0));
  std::size_t row = 0;
  for (std::size_t src : free_rows) {
    for (std::size_t j = 0; j < n; ++j) out.map.projection(row, j) = s.u(src, j);
    ++row;
  }
  for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
    for (std::size_t j = 0; j < n; ++j) out.map.projection(row, j) = s.u(torsion_rows[t], j);
    out.map.moduli[row] = torsion[t];
    ++row;
  }
  return out;
}

SaturatedAmbient saturate_ambient(const FgGroup& g, std::span<const GroupElement> x) {
  const std::size_t r = g.free_rank();
  const std::size_t s = g.torsion_count();
  IntMatrix free_part(r, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!g.contains(x[j])) throw std::invalid_argument("element does not belong to the group");
    for (std::size_t i = 0; i < r; ++i) free_part(i, j) = x[j].coords[i];
  }

  SaturatedAmbient out;
  const std::size_t rho = free_part.empty() ? 0 : rank(free_part);
  if (rho == r) {
    out.group = g;
    out.elements.reserve(x.size());
    for (const GroupElement& e : x) out.elements.push_back(g.canonical(e));
    return out;
  }

  // The first rho columns of u^{-1} span the saturation, so the coordinates
  // of a vector in that basis are the first rho entries of u * v.
  SnfResult sf = snf(free_part);
  out.group = FgGroup(rho, g.torsion());
  out.elements.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<Integer> image = sf.u * free_part.column(j);
    GroupElement e;
    e.coords.reserve(rho + s);
    for (std::size_t i = 0; i < rho; ++i) e.coords.push_back(image[i]);
    for (std::size_t i = 0; i < s; ++i) e.coords.push_back(x[j].coords[r + i]);
    out.elements.push_back(out.group.canonical(e));
  }
  return out;
}

}  // namespace arithmat
