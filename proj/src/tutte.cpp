#include "arithmat/tutte.hpp"

#include "arithmat/errors.hpp"

#include <map>

namespace arithmat {

namespace {

// Buckets weights by (corank, nullity) before expanding, so only one
// shifted monomial per bucket is multiplied out.
template <class Weight>
BiPoly corank_nullity_sum(const ArithmeticMatroid& m, Weight weight) {
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  const int total = t.rank[x];
  std::map<std::pair<unsigned, unsigned>, Integer> buckets;
  for (Subset a = 0;; ++a) {
    const unsigned corank = static_cast<unsigned>(total - t.rank[a]);
    const unsigned nullity = static_cast<unsigned>(cardinality(a) - t.rank[a]);
    buckets[{corank, nullity}] += weight(t, a);
    if (a == x) break;
  }
  BiPoly out;
  for (const auto& [e, w] : buckets) out += shifted_monomial(e.first, e.second) * w;
  return out;
}

BiPoly delcon(const ArithmeticMatroid& m) {
  const std::size_t k = m.size();
  if (k == 0) return BiPoly::constant(m.multiplicity(0));
  std::size_t free_v = kNoElement;
  std::size_t torsion_v = kNoElement;
  for (std::size_t i = k; i-- > 0;) {
    const ElementKind kind = classify(m, i);
    if (kind == ElementKind::Proper) {
      return delcon(delete_element(m, i)) + delcon(contract_element(m, i));
    }
    if (kind == ElementKind::Free && free_v == kNoElement) free_v = i;
    if (kind == ElementKind::Torsion && torsion_v == kNoElement) torsion_v = i;
  }
  if (free_v != kNoElement) {
    return delcon(delete_element(m, free_v)) * (BiPoly::x() - BiPoly::constant(1)) +
           delcon(contract_element(m, free_v));
  }
  return delcon(delete_element(m, torsion_v)) +
         delcon(contract_element(m, torsion_v)) * (BiPoly::y() - BiPoly::constant(1));
}

}  // namespace

BiPoly arithmetic_tutte_subsetsum(const ArithmeticMatroid& m, std::size_t cap) {
  if (m.size() > cap) throw CapExceeded("arithmetic_tutte_subsetsum", m.size(), cap);
  return corank_nullity_sum(
      m, [](const MatroidTable& t, Subset a) -> const Integer& { return t.multiplicity[a]; });
}

BiPoly classical_tutte(const ArithmeticMatroid& m, std::size_t cap) {
  if (m.size() > cap) throw CapExceeded("classical_tutte", m.size(), cap);
  return corank_nullity_sum(m, [](const MatroidTable&, Subset) { return Integer(1); });
}

BiPoly arithmetic_tutte_delcon(const ArithmeticMatroid& m) {
  if (m.backing() == Backing::Representation) {
    return delcon(ArithmeticMatroid::from_table(m.table(), m.labels()));
  }
  return delcon(m);
}

const char* to_string(Specialization which) {
  switch (which) {
    case Specialization::BasesCount: return "bases";
    case Specialization::Components: return "components";
    case Specialization::Poincare: return "poincare";
    case Specialization::Characteristic: return "characteristic";
    case Specialization::IndepCount: return "indep";
  }
  return "?";
}

SpecializationValue specialize(const BiPoly& p, Specialization which, unsigned n) {
  switch (which) {
    case Specialization::BasesCount:
      return p.evaluate(1, 1);
    case Specialization::Components:
      return p.evaluate(1, 0);
    case Specialization::Characteristic: {
      UniPoly c = p.substitute(UniPoly{1, -1}, UniPoly{});
      if (n % 2 == 1) c *= Integer(-1);
      return c;
    }
    case Specialization::IndepCount:
      return p.substitute(UniPoly{1, 1}, UniPoly::constant(1));
    case Specialization::Poincare: {
      // M(x, 0) = sum c_i x^i  ->  sum c_i (2q+1)^i q^(n-i)
      UniPoly out;
      const UniPoly shift{1, 2};
      for (const auto& [e, c] : p.terms()) {
        if (e.second != 0) continue;
        if (e.first > n)
          throw PreconditionError("poincare: x-degree of M(x,0) exceeds the supplied rank");
        out += shift.pow(e.first) * UniPoly::monomial(c, n - e.first);
      }
      return out;
    }
  }
  return Integer(0);
}

SequenceProperties sequence_tests(const UniPoly& p) {
  std::vector<Integer> a;
  bool started = false;
  for (const Integer& c : p.coeffs()) {
    if (c != 0) started = true;
    if (started) a.push_back(abs(c));
  }
  SequenceProperties out;
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  out.unimodal = a.empty() || i + 1 == a.size();
  for (std::size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) out.log_concave = false;
  return out;
}

}  // namespace arithmat
