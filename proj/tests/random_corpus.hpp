#pragma once

// Seeded generators for property tests.

#include "arithmat/arith_matroid.hpp"
#include "arithmat/representation.hpp"

#include <random>
#include <vector>

namespace corpus {

using arithmat::FgGroup;
using arithmat::GroupElement;
using arithmat::Integer;
using arithmat::Representation;

struct RepresentationShape {
  std::size_t max_k = 7;
  std::size_t max_free_rank = 4;
  int entry_bound = 9;
};

// Torsion parts drawn from {2,3,4,6}, kept only when they form a divisibility chain.
inline std::vector<Integer> random_torsion(std::mt19937& rng) {
  static const int orders[] = {2, 3, 4, 6};
  const int count = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<Integer> t;
  for (int i = 0; i < count; ++i) t.push_back(orders[std::uniform_int_distribution<int>(0, 3)(rng)]);
  std::sort(t.begin(), t.end());
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] % t[i - 1] != 0) return {t.back()};
  return t;
}

inline Representation random_representation(std::mt19937& rng, const RepresentationShape& shape = {}) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, shape.max_k)(rng);
  const std::size_t r = std::uniform_int_distribution<std::size_t>(0, shape.max_free_rank)(rng);
  const FgGroup g(r, random_torsion(rng));
  std::uniform_int_distribution<int> entry(-shape.entry_bound, shape.entry_bound);
  std::vector<GroupElement> x;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> c;
    for (std::size_t j = 0; j < r; ++j) c.push_back(entry(rng));
    for (const Integer& d : g.torsion())
      c.push_back(std::uniform_int_distribution<int>(0, static_cast<int>(d) - 1)(rng));
    x.emplace_back(std::move(c));
  }
  return Representation(g, std::move(x));
}

// Uniformly random permutation of 0..k-1.
inline std::vector<std::size_t> random_order(std::mt19937& rng, std::size_t k) {
  std::vector<std::size_t> seq(k);
  for (std::size_t i = 0; i < k; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

// Matroid of random vectors over GF(p) with all multiplicities 1.
inline arithmat::ArithmeticMatroid random_trivial_matroid(std::mt19937& rng, std::size_t max_k = 7) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_k)(rng);
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const int p = std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 3;
  std::uniform_int_distribution<int> entry(0, p - 1);
  std::vector<std::vector<int>> vecs(k, std::vector<int>(dim));
  for (auto& v : vecs)
    for (int& e : v) e = entry(rng);
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rank(n);
  for (arithmat::Subset s = 0; s < n; ++s) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < k; ++i)
      if (arithmat::contains(s, i)) rows.push_back(vecs[i]);
    int rk = 0;
    for (std::size_t col = 0; col < dim && rk < static_cast<int>(rows.size()); ++col) {
      std::size_t piv = rk;
      while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rk]);
      const int inv = rows[rk][col] % p == 1 ? 1 : p - 1;  // inverse of 1 or p-1 (p in {2,3})
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == static_cast<std::size_t>(rk)) continue;
        const int f = (rows[i][col] * inv) % p;
        for (std::size_t c = 0; c < dim; ++c) rows[i][c] = ((rows[i][c] - f * rows[rk][c]) % p + p) % p;
      }
      ++rk;
    }
    rank[s] = rk;
  }
  return arithmat::ArithmeticMatroid::from_table(k, std::move(rank), std::vector<Integer>(n, 1));
}

}  // namespace corpus
