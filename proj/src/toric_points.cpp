#include "arithmat/toric_points.hpp"

#include "arithmat/errors.hpp"
#include "arithmat/tutte.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace arithmat {

Rational reduce_mod_one(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return Rational(mod_floor(num, den), den);
}

Rational TorusPoint::pair(const GroupElement& lambda) const {
  if (lambda.size() != values.size()) throw std::invalid_argument("character has the wrong length");
  Rational sum = 0;
  for (std::size_t j = 0; j < values.size(); ++j) sum += Rational(lambda.coords[j]) * values[j];
  return reduce_mod_one(sum);
}

std::string TorusPoint::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ",";
    out += values[j].str();
  }
  return out + ")";
}

namespace {

// Points are enumerated on the grid (1/L) Z^n / Z^n, where L is a common
// multiple of every invariant factor that occurs; coordinates are the
// numerators in [0, L). Z is long long when L is small enough, else Integer.

struct BasisSystem {
  SnfResult snf;
  std::size_t n = 0;
};

BasisSystem solve_basis(const Representation& r, Subset basis) {
  const FgGroup& g = r.group();
  const std::size_t n = g.dimension();
  const std::vector<GroupElement> b = r.sublist(basis);
  if (b.size() != g.free_rank()) throw PreconditionError("subset is not a basis");
  std::vector<std::vector<Integer>> columns;
  for (const GroupElement& e : b) columns.push_back(e.coords);
  const IntMatrix q = g.relation_block();
  for (std::size_t c = 0; c < q.cols(); ++c) columns.push_back(q.column(c));
  BasisSystem out{snf(IntMatrix::from_columns(columns, n)), n};
  if (out.snf.rank() != n) throw PreconditionError("subset is not a basis");
  return out;
}

Integer largest_factor(const BasisSystem& s) {
  Integer d = 1;
  for (const Integer& x : s.snf.d) d = std::max(d, x);
  return d;
}

template <class Z>
Z to_scalar(const Integer& v) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return v;
  } else {
    return static_cast<Z>(v);
  }
}

template <class Z>
Z reduce(const Z& a, const Z& l) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return mod_floor(a, l);
  } else {
    const Z m = a % l;
    return m < 0 ? m + l : m;
  }
}

template <class Z>
Z mul_mod(const Z& a, const Z& b, const Z& l) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return mod_floor(a * b, l);
  } else {
    return static_cast<Z>((static_cast<__int128>(a) * b) % l);
  }
}

template <class Z>
Z gcd_scalar(const Z& a, const Z& b) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return gcd(a, b);
  } else {
    return std::gcd(a, b);
  }
}

// Writes w = U^{-T} p with w_i in (1/d_i) Z. In L-scaled coordinates each unit
// step of digit a_i adds (L/d_i) * (row i of U); a wrap of a_i adds it as well,
// since d_i such steps vanish modulo L. The values of the characters are
// carried along the walk, so X_p costs k additions per step.
template <class Z, class Visit>
void walk_basis(const BasisSystem& s, const Z& l, const std::vector<std::vector<Z>>& chars, Visit visit) {
  const std::size_t n = s.n;
  const std::size_t k = chars.size();
  std::vector<std::vector<Z>> step(n, std::vector<Z>(n));
  std::vector<std::vector<Z>> char_step(n, std::vector<Z>(k, Z(0)));
  std::vector<Z> radix(n);
  for (std::size_t i = 0; i < n; ++i) {
    radix[i] = to_scalar<Z>(s.snf.d[i]);
    const Integer scale = Integer(l) / s.snf.d[i];
    for (std::size_t j = 0; j < n; ++j) step[i][j] = to_scalar<Z>(mod_floor(scale * s.snf.u(i, j), Integer(l)));
    for (std::size_t e = 0; e < k; ++e)
      for (std::size_t j = 0; j < n; ++j)
        char_step[i][e] = reduce<Z>(char_step[i][e] + mul_mod<Z>(chars[e][j], step[i][j], l), l);
  }
  std::vector<Z> p(n, Z(0));
  std::vector<Z> value(k, Z(0));
  std::vector<Z> a(n, Z(0));
  for (;;) {
    Subset x_p = 0;
    for (std::size_t e = 0; e < k; ++e)
      if (value[e] == 0) x_p |= singleton(e);
    visit(p, x_p);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (radix[i] == 1) continue;
      for (std::size_t j = 0; j < n; ++j) {
        p[j] += step[i][j];
        if (p[j] >= l) p[j] -= l;
      }
      for (std::size_t e = 0; e < k; ++e) {
        value[e] += char_step[i][e];
        if (value[e] >= l) value[e] -= l;
      }
      if (++a[i] != radix[i]) break;
      a[i] = 0;
    }
    if (i == n) break;
  }
}

struct Enumeration {
  std::vector<PointRecord> records;         // filled only when requested
  std::map<Subset, std::size_t> histogram;  // x_p -> number of points
};

// Each point is reported once, by the first basis (in `order`) it solves;
// a point solves B exactly when B <= X_p.
template <class Z>
void collect(const Representation& r, const std::vector<Subset>& order,
             const std::vector<BasisSystem>& systems, const Integer& lcm, bool materialize,
             Enumeration& out) {
  const Z l = to_scalar<Z>(lcm);
  std::vector<std::vector<Z>> chars;
  for (const GroupElement& e : r.elements()) {
    std::vector<Z> c;
    for (const Integer& x : e.coords) c.push_back(to_scalar<Z>(mod_floor(x, lcm)));
    chars.push_back(std::move(c));
  }
  // Numerators share the denominator l, so they sort like the points themselves.
  std::vector<std::pair<std::vector<Z>, Subset>> raw;
  for (std::size_t b = 0; b < systems.size(); ++b) {
    walk_basis<Z>(systems[b], l, chars, [&](const std::vector<Z>& p, Subset x_p) {
      for (std::size_t earlier = 0; earlier < b; ++earlier)
        if (is_subset(order[earlier], x_p)) return;
      ++out.histogram[x_p];
      if (materialize) raw.emplace_back(p, x_p);
    });
  }
  std::sort(raw.begin(), raw.end());
  out.records.reserve(raw.size());
  for (const auto& [p, x_p] : raw) {
    TorusPoint t;
    t.values.reserve(p.size());
    for (const Z& v : p) {
      const Z g = gcd_scalar(v, l);
      t.values.emplace_back(Integer(v / g), Integer(l / g));
    }
    out.records.push_back({std::move(t), x_p});
  }
}

Enumeration enumerate(const Representation& r, const std::vector<Subset>& basis_order, bool materialize) {
  const ArithmeticMatroid m = from_representation(r);
  if (static_cast<std::size_t>(m.rank()) != r.group().free_rank())
    throw PreconditionError("rank of X is below the free rank of the ambient group");
  const std::vector<Subset> order = basis_order.empty() ? bases(m) : basis_order;
  std::vector<BasisSystem> systems;
  Integer lcm = 1;
  for (Subset b : order) {
    systems.push_back(solve_basis(r, b));
    const Integer d = largest_factor(systems.back());
    lcm = lcm / gcd(lcm, d) * d;
  }
  Enumeration out;
  if (lcm < Integer(std::numeric_limits<long long>::max() / 4)) {
    collect<long long>(r, order, systems, lcm, materialize, out);
  } else {
    collect<Integer>(r, order, systems, lcm, materialize, out);
  }
  return out;
}

}  // namespace

std::vector<TorusPoint> basis_points(const Representation& r, Subset basis) {
  const BasisSystem s = solve_basis(r, basis);
  const Integer l = largest_factor(s);
  std::vector<TorusPoint> out;
  walk_basis<Integer>(s, l, {}, [&](const std::vector<Integer>& p, Subset) {
    TorusPoint t;
    for (const Integer& v : p) t.values.emplace_back(v, l);
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointRecord> enumerate_points(const Representation& r, const std::vector<Subset>& basis_order) {
  return enumerate(r, basis_order, true).records;
}

ComponentCountReport verify_component_counts(const Representation& r) {
  const ArithmeticMatroid m = from_representation(r);
  const Enumeration e = enumerate(r, {}, false);
  // count[A] = number of points whose X_p contains A (superset sums of the histogram)
  std::vector<std::size_t> count(std::size_t{1} << m.size(), 0);
  for (const auto& [s, c] : e.histogram) count[s] += c;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (Subset s = 0; s < count.size(); ++s)
      if (!contains(s, j)) count[s] += count[s | singleton(j)];
  ComponentCountReport report;
  const int full = m.rank();
  for (Subset a = 0; a < count.size(); ++a) {
    if (m.rank(a) != full) continue;
    const Integer mult = m.multiplicity(a);
    if (mult != count[a]) {
      report.ok = false;
      report.discrepancies.push_back({a, count[a], mult});
    }
  }
  return report;
}

AesReport verify_aes(const Representation& r) {
  const ArithmeticMatroid m = from_representation(r);
  const Enumeration e = enumerate(r, {}, false);
  const UniPoly one = UniPoly::constant(1);
  const UniPoly y{0, 1};
  AesReport report;
  report.arithmetic = arithmetic_tutte_subsetsum(m).substitute(one, y);
  for (const auto& [s, c] : e.histogram)
    report.local_sum += classical_tutte(restrict_to(m, s)).substitute(one, y) * Integer(c);
  report.ok = report.arithmetic == report.local_sum;
  return report;
}

}  // namespace arithmat
