#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithmat/exact_linalg.hpp"
#include "oracles.hpp"

#include <random>

using namespace arithmat;

namespace {

IntMatrix diagonal(const SnfResult& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.d.size(); ++i) d(i, i) = s.d[i];
  return d;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
  return m;
}

// Product of elementary operations, hence determinant +-1.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const Integer f = c(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += f * u(j, k);
  }
  return u;
}

void check_snf(const IntMatrix& m) {
  const SnfResult s = snf(m);
  CHECK(s.u * m * s.v == diagonal(s, m.rows(), m.cols()));
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  CHECK(s.u * s.u_inv == IntMatrix::identity(m.rows()));
  CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols()));
  for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
    CHECK(s.d[i] >= 0);
    if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
    if (s.d[i] == 0) CHECK(s.d[i + 1] == 0);
  }
  CHECK(s.rank() == oracle::rational_rank(m));
}

}  // namespace

TEST_CASE("snf of small fixed matrices") {
  CHECK(snf(IntMatrix::identity(3)).d == std::vector<Integer>{1, 1, 1});
  CHECK(snf(IntMatrix{{1, 1}, {1, -1}}).d == std::vector<Integer>{1, 2});
  const IntMatrix cols = IntMatrix::from_columns({{3, 3, 0}, {-6, -6, -6}}, 3);
  CHECK(snf(cols).d == std::vector<Integer>{3, 6});
  check_snf(cols);
  check_snf(IntMatrix{{-6, 9, 3, 3, 5}, {-7, 8, 9, -2, 1}, {2, -7, 0, -5, -9},
                      {-5, -1, 2, 4, 4}, {3, 0, -4, 6, 7}, {0, 5, 0, 7, 2}});
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(IntMatrix::identity(4)) == 4);
  CHECK(rank(IntMatrix::from_columns({{1, 1}, {1, -1}, {2, 0}}, 2)) == 2);
  CHECK(rank(IntMatrix(0, 0)) == 0);
}

TEST_CASE("gcd of maximal minors") {
  CHECK(gcd_maximal_minors(IntMatrix::from_columns({{1, 2, 0}, {2, 0, 0}, {0, 1, 6}}, 3)) == 24);
  CHECK(gcd_maximal_minors(IntMatrix::identity(5)) == 1);
  CHECK(gcd_maximal_minors(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(gcd_maximal_minors(IntMatrix(2, 3)) == 1);
  CHECK(gcd_maximal_minors(IntMatrix(0, 0)) == 1);
}

TEST_CASE("saturate") {
  const IntMatrix x = IntMatrix::from_columns({{3, 3, 0}, {-6, -6, -6}, {0, 0, 3}, {0, 0, 12}}, 3);
  const IntMatrix sat = saturate(x);
  REQUIRE(sat.cols() == 2);
  // The saturation of this span is spanned by (1,1,0) and (0,0,1).
  const IntMatrix expected = IntMatrix::from_columns({{1, 1, 0}, {0, 0, 1}}, 3);
  CHECK(oracle::minor_gcd(sat) == 1);
  CHECK(oracle::rational_rank(sat.hconcat(expected)) == 2);
  CHECK(oracle::minor_gcd(sat.hconcat(expected)) == 1);
  // x lies in the lattice spanned by the saturation.
  CHECK(oracle::minor_gcd(sat.hconcat(x)) == 1);

  const IntMatrix single = saturate(IntMatrix::from_columns({{2, 4}}, 2));
  REQUIRE(single.cols() == 1);
  CHECK((single.column(0) == std::vector<Integer>{1, 2} || single.column(0) == std::vector<Integer>{-1, -2}));

  CHECK(oracle::minor_gcd(saturate(IntMatrix{{2, 1}, {1, 1}})) == 1);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, 6);
    oracle::Square sq(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sq[i][j] = m(i, j);
    CHECK(determinant(m) == oracle::laplace(sq));
  }
}

TEST_CASE("property: snf invariants and minor gcd on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 9);
    if (trial % 5 == 0) {  // force rank deficiency
      for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = 2 * m(i, 0);
    }
    check_snf(m);
    CHECK(gcd_maximal_minors(m) == oracle::minor_gcd(m));
  }
}

TEST_CASE("property: larger matrices stay tractable") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) check_snf(random_matrix(rng, 4 + rng() % 5, 4 + rng() % 6, 9));
}

TEST_CASE("property: minor gcd is invariant under unimodular changes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 9);
    const IntMatrix changed = random_unimodular(rng, rows) * m * random_unimodular(rng, cols);
    CHECK(gcd_maximal_minors(changed) == gcd_maximal_minors(m));
  }
}

TEST_CASE("property: saturation is idempotent and contains the span") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 9);
    const IntMatrix s1 = saturate(m);
    CHECK(s1.cols() == oracle::rational_rank(m));
    if (s1.cols() == 0) continue;
    const IntMatrix s2 = saturate(s1);
    CHECK(oracle::minor_gcd(s1) == 1);
    CHECK(oracle::rational_rank(s1.hconcat(s2)) == s1.cols());
    CHECK(oracle::minor_gcd(s1.hconcat(s2)) == 1);
    CHECK(oracle::minor_gcd(s1.hconcat(m)) == 1);
  }
}
