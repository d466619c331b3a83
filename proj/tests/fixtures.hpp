#pragma once

// Worked examples and small hand-built matroids shared by the test binaries.

#include "arithmat/arith_matroid.hpp"
#include "arithmat/representation.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

using arithmat::ArithmeticMatroid;
using arithmat::FgGroup;
using arithmat::GroupElement;
using arithmat::Integer;
using arithmat::Representation;
using arithmat::Subset;

// Subset from a string of single-letter labels, "abd" -> {a,b,d}, relative to `names`.
inline Subset set_of(const std::string& members, const std::string& names = "abcd") {
  Subset s = 0;
  for (char ch : members) s |= arithmat::singleton(names.find(ch));
  return s;
}

// Z^2, two vectors spanning an index-2 sublattice.
inline Representation square() {
  return Representation(FgGroup::free(2), {{1, 1}, {1, -1}}, {"v1", "v2"});
}

// Z^2 + Z/6 with two free and two torsion vectors.
inline Representation free_torsion() {
  return Representation(FgGroup(2, {Integer(6)}), {{1, 2, 0}, {2, 0, 1}, {0, 0, 2}, {0, 0, 3}},
                        {"a", "b", "c", "d"});
}

// Z^3 with <X> spanning a rank-2 sublattice.
inline Representation rank_two_in_z3() {
  return Representation(FgGroup::free(3), {{3, 3, 0}, {-6, -6, -6}, {0, 0, 3}, {0, 0, 12}},
                        {"a", "b", "c", "d"});
}

// Three vectors in Z^2, the last one proper.
inline Representation triangle() {
  return Representation(FgGroup::free(2), {{2, -1}, {-1, 2}, {1, 1}}, {"a", "b", "c"});
}

// Z^4 with the unit vectors and (1,1,1,5).
inline Representation non_unimodal() {
  return Representation(FgGroup::free(4), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 5}},
                        {"e1", "e2", "e3", "v"});
}

// Expected multiplicity tables keyed by label strings.
inline const std::map<std::string, long long>& free_torsion_table() {
  static const std::map<std::string, long long> t = {
      {"", 6},    {"a", 6},   {"b", 12},  {"c", 2},   {"d", 3},    {"ab", 24},
      {"ac", 2},  {"ad", 3},  {"bc", 4},  {"bd", 6},  {"cd", 1},   {"abc", 8},
      {"abd", 12}, {"acd", 1}, {"bcd", 2}, {"abcd", 4}};
  return t;
}

inline const std::map<std::string, long long>& rank_two_table() {
  static const std::map<std::string, long long> t = {
      {"", 1},    {"a", 3},   {"b", 6},    {"c", 3},    {"d", 12},  {"ab", 18},
      {"ac", 9},  {"ad", 36}, {"bc", 18},  {"bd", 72},  {"cd", 3},  {"abc", 9},
      {"abd", 18}, {"acd", 9}, {"bcd", 18}, {"abcd", 9}};
  return t;
}

inline ArithmeticMatroid table_matroid(std::size_t k, std::vector<int> rank,
                                       std::vector<long long> mult,
                                       std::vector<std::string> labels = {}) {
  std::vector<Integer> m(mult.begin(), mult.end());
  return ArithmeticMatroid::from_table(k, std::move(rank), std::move(m), std::move(labels));
}

// Two-element matroids each violating one multiplicity axiom; f is free, t torsion.
// Ground order is (f, t) where both are present.
inline ArithmeticMatroid fails_axiom1() {
  return table_matroid(1, {0, 0}, {3, 2}, {"t"});
}

inline ArithmeticMatroid fails_axiom2() {
  return table_matroid(1, {0, 1}, {2, 3}, {"f"});
}

inline ArithmeticMatroid fails_axiom3() {
  // masks: {} {f} {t} {f,t}
  return table_matroid(2, {0, 1, 0, 1}, {2, 2, 1, 2}, {"f", "t"});
}

// Four torsion elements: m(empty)=4, singletons 2, everything larger 1.
inline ArithmeticMatroid fails_axiom4() {
  std::vector<int> rank(16, 0);
  std::vector<long long> mult(16, 1);
  mult[0] = 4;
  for (int i = 0; i < 4; ++i) mult[1 << i] = 2;
  return table_matroid(4, rank, mult, {"t1", "t2", "t3", "t4"});
}

// Four free elements: the mirror image of fails_axiom4 under duality.
inline ArithmeticMatroid fails_axiom5() {
  std::vector<int> rank(16);
  std::vector<long long> mult(16, 1);
  for (Subset s = 0; s < 16; ++s) rank[s] = arithmat::cardinality(s);
  mult[15] = 4;
  for (int i = 0; i < 4; ++i) mult[15 & ~(1u << i)] = 2;
  return table_matroid(4, rank, mult, {"f1", "f2", "f3", "f4"});
}

// Three parallel-free rank-2 vectors with every basis of multiplicity 2 and m(X) = 1.
inline ArithmeticMatroid not_gcd() {
  std::vector<int> rank = {0, 1, 1, 2, 1, 2, 2, 2};
  std::vector<long long> mult = {1, 1, 1, 2, 1, 2, 2, 1};
  return table_matroid(3, rank, mult, {"a", "b", "c"});
}

// Ranks of a k-element configuration given by GF(2) vectors (bitmasks).
inline std::vector<int> binary_ranks(const std::vector<unsigned>& vectors) {
  const std::size_t k = vectors.size();
  std::vector<int> rank(std::size_t{1} << k);
  for (Subset s = 0; s < rank.size(); ++s) {
    std::vector<unsigned> basis;
    for (std::size_t i = 0; i < k; ++i) {
      if (!arithmat::contains(s, i)) continue;
      unsigned v = vectors[i];
      for (unsigned b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
    rank[s] = static_cast<int>(basis.size());
  }
  return rank;
}

inline ArithmeticMatroid fano() {
  std::vector<int> rank = binary_ranks({1, 2, 4, 3, 5, 6, 7});
  std::vector<Integer> mult(rank.size(), 1);
  return ArithmeticMatroid::from_table(7, std::move(rank), std::move(mult), {});
}

}  // namespace fixtures
