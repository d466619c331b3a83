#pragma once

// Slow, direct reference computations used to cross-check the library.
// Nothing here calls the routine it is meant to check.

#include "arithmat/activity.hpp"
#include "arithmat/arith_matroid.hpp"
#include "arithmat/exact_linalg.hpp"

#include <map>
#include <vector>

namespace oracle {

using arithmat::ArithmeticMatroid;
using arithmat::IntMatrix;
using arithmat::Integer;
using arithmat::Rational;
using arithmat::Subset;

using Square = std::vector<std::vector<Integer>>;

// Cofactor expansion along the first row.
inline Integer laplace(const Square& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Square minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * laplace(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Rank over Q by Gaussian elimination on fractions.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (static_cast<std::size_t>(arithmat::cardinality(s)) == r) out.push_back(arithmat::elements_of(s));
  return out;
}

// GCD of all minors of order rank(m), by explicit enumeration; 1 for rank 0.
inline Integer minor_gcd(const IntMatrix& m) {
  const std::size_t r = rational_rank(m);
  if (r == 0) return 1;
  Integer g = 0;
  for (const auto& rows : combinations(m.rows(), r))
    for (const auto& cols : combinations(m.cols(), r)) {
      Square sub(r, std::vector<Integer>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub[i][j] = m(rows[i], cols[j]);
      Integer d = laplace(sub);
      if (d < 0) d = -d;
      g = arithmat::gcd(g, d);
    }
  return g;
}

// mu(S) = alternating sum of m(T) over S <= T <= X.
inline Integer mu(const ArithmeticMatroid& m, Subset s) {
  const Subset rest = m.ground() & ~s;
  Integer total = 0;
  for (Subset extra = rest;; extra = (extra - 1) & rest) {
    const Integer v = m.multiplicity(s | extra);
    total += (arithmat::cardinality(extra) % 2 == 0) ? v : Integer(-v);
    if (extra == 0) break;
  }
  return total;
}

// Rank of the dual straight from the primal rank function.
inline int dual_rank(const ArithmeticMatroid& m, Subset a) {
  return arithmat::cardinality(a) - m.rank() + m.rank(m.ground() & ~a);
}

// Elements of X \ B that depend on the elements of B coming after them in `order`.
template <class RankFn>
Subset active(std::size_t k, RankFn rank, const std::vector<std::size_t>& order, Subset basis) {
  std::vector<std::size_t> pos(k);
  for (std::size_t p = 0; p < k; ++p) pos[order[p]] = p;
  Subset out = 0;
  for (std::size_t v = 0; v < k; ++v) {
    if (arithmat::contains(basis, v)) continue;
    Subset tail = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (arithmat::contains(basis, b) && pos[b] > pos[v]) tail |= arithmat::singleton(b);
    if (rank(tail | arithmat::singleton(v)) == rank(tail)) out |= arithmat::singleton(v);
  }
  return out;
}

inline Subset primal_active(const ArithmeticMatroid& m, const std::vector<std::size_t>& order, Subset basis) {
  return active(m.size(), [&](Subset s) { return m.rank(s); }, order, basis);
}

inline Subset dual_active(const ArithmeticMatroid& m, const std::vector<std::size_t>& order, Subset basis) {
  const Subset complement = m.ground() & ~basis;
  return active(m.size(), [&](Subset s) { return dual_rank(m, s); }, order, complement);
}

// Pairs (B,T) with T >= B of maximal rank and positive mu, grouped by the
// active elements they contain; value = total mu weight.
inline std::map<Subset, Integer> grouped_primal(const ArithmeticMatroid& m, const std::vector<std::size_t>& order,
                                                Subset basis) {
  const Subset act = primal_active(m, order, basis);
  std::map<Subset, Integer> out;
  const Subset rest = m.ground() & ~basis;
  for (Subset extra = rest;; extra = (extra - 1) & rest) {
    const Subset t = basis | extra;
    const Integer w = mu(m, t);
    if (w > 0) out[t & act] += w;
    if (extra == 0) break;
  }
  return out;
}

// The dual counterpart: T~ >= X \ B weighted by mu*(T~) = alternating sum of
// m(X \ U) over T~ <= U <= X, grouped by the dual-active elements inside B.
inline std::map<Subset, Integer> grouped_dual(const ArithmeticMatroid& m, const std::vector<std::size_t>& order,
                                              Subset basis) {
  const Subset complement = m.ground() & ~basis;
  const Subset act = dual_active(m, order, basis);
  std::map<Subset, Integer> out;
  for (Subset extra = basis;; extra = (extra - 1) & basis) {
    const Subset t = complement | extra;
    const Subset rest = m.ground() & ~t;
    Integer w = 0;
    for (Subset more = rest;; more = (more - 1) & rest) {
      const Integer v = m.multiplicity(m.ground() & ~(t | more));
      w += (arithmat::cardinality(more) % 2 == 0) ? v : Integer(-v);
      if (more == 0) break;
    }
    if (w > 0) out[t & act] += w;
    if (extra == 0) break;
  }
  return out;
}

inline std::map<Subset, Integer> class_weights(const std::vector<arithmat::PairClass>& classes) {
  std::map<Subset, Integer> out;
  for (const auto& c : classes) out[c.active] += c.weight;
  return out;
}

}  // namespace oracle
