#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithmat/errors.hpp"
#include "arithmat/toric_points.hpp"
#include "arithmat/tutte.hpp"
#include "fixtures.hpp"
#include "random_corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>

using namespace arithmat;

namespace {

Rational q(long long n, long long d) { return Rational(n, d); }

// Every point of (1/n)Z^r x (1/d_1)Z x ... in the torus, kept when the
// characters vanishing there span a sublist of full rank. Empty when the grid
// would exceed `limit` points.
std::optional<std::vector<PointRecord>> brute_force_points(const Representation& r, long long limit) {
  const ArithmeticMatroid m = from_representation(r);
  Integer n = 1;
  for (Subset b : bases(m)) n = lcm(n, m.multiplicity(b));
  std::vector<long long> sizes;
  for (std::size_t i = 0; i < r.group().free_rank(); ++i) sizes.push_back(static_cast<long long>(n));
  for (const Integer& d : r.group().torsion()) sizes.push_back(static_cast<long long>(d));
  long long total = 1;
  for (long long s : sizes) {
    total *= s;
    if (total > limit) return std::nullopt;
  }
  std::vector<PointRecord> out;
  std::vector<long long> idx(sizes.size(), 0);
  for (long long step = 0; step < total; ++step) {
    TorusPoint p;
    for (std::size_t j = 0; j < sizes.size(); ++j) p.values.push_back(q(idx[j], sizes[j]));
    Subset xp = 0;
    for (std::size_t e = 0; e < r.size(); ++e)
      if (p.on_kernel(r.elements()[e])) xp |= singleton(e);
    if (m.rank(xp) == m.rank()) out.push_back({p, xp});
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (++idx[j] < sizes[j]) break;
      idx[j] = 0;
    }
  }
  std::sort(out.begin(), out.end(), [](const PointRecord& a, const PointRecord& b) { return a.point < b.point; });
  return out;
}

}  // namespace

TEST_CASE("pairing and reduction") {
  CHECK(reduce_mod_one(q(7, 2)) == q(1, 2));
  CHECK(reduce_mod_one(q(-1, 3)) == q(2, 3));
  const TorusPoint p{{q(1, 2), q(1, 3)}};
  CHECK(p.pair(GroupElement{1, 3}) == q(1, 2));
  CHECK(p.on_kernel(GroupElement{2, 3}));
  CHECK(p.to_string() == "(1/2,1/3)");
  CHECK(TorusPoint{{q(0, 1)}}.to_string() == "(0)");
}

TEST_CASE("two points for the index-two square lattice") {
  const std::vector<PointRecord> pts = enumerate_points(fixtures::square());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].point == TorusPoint{{q(0, 1), q(0, 1)}});
  CHECK(pts[1].point == TorusPoint{{q(1, 2), q(1, 2)}});
  CHECK(pts[0].x_p == 0b11);
  CHECK(pts[1].x_p == 0b11);
}

TEST_CASE("three points for the triangle, each on every character") {
  const std::vector<PointRecord> pts = enumerate_points(fixtures::triangle());
  REQUIRE(pts.size() == 3);
  for (const PointRecord& r : pts) CHECK(r.x_p == 0b111);
}

TEST_CASE("basis points") {
  const Representation r = fixtures::rank_two_in_z3();
  const ArithmeticMatroid m = from_representation(r);
  for (Subset b : bases(m)) {
    const std::vector<TorusPoint> pts = basis_points(r, b);
    CHECK(pts.size() == m.multiplicity(b));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const TorusPoint& p : pts)
      for (std::size_t e : elements_of(b)) CHECK(p.on_kernel(r.elements()[e]));
  }
  CHECK_THROWS_AS(basis_points(r, fixtures::set_of("cd")), PreconditionError);
}

TEST_CASE("verification on all fixtures") {
  for (const Representation& r : {fixtures::square(), fixtures::free_torsion(), fixtures::rank_two_in_z3(),
                                  fixtures::triangle(), fixtures::non_unimodal()}) {
    CHECK(verify_component_counts(r).ok);
    const AesReport aes = verify_aes(r);
    CHECK(aes.ok);
    CHECK(aes.arithmetic == aes.local_sum);
    CHECK(aes.arithmetic == arithmetic_tutte_subsetsum(from_representation(r)).substitute(UniPoly{1}, UniPoly{0, 1}));
  }
  CHECK(enumerate_points(fixtures::free_torsion()).size() == 24);
  CHECK(enumerate_points(fixtures::rank_two_in_z3()).size() == 90);
  CHECK(enumerate_points(fixtures::non_unimodal()).size() == 5);
}

TEST_CASE("a list of zeros has a single point on every character") {
  // Saturation shrinks the ambient to the trivial group.
  const std::vector<PointRecord> pts = enumerate_points(Representation(FgGroup::free(1), {{0}, {0}}));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].point.values.empty());
  CHECK(pts[0].x_p == 0b11);
}

TEST_CASE("property: enumeration matches a brute-force grid search") {
  std::mt19937 rng(81);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 80; ++trial) {
    const Representation r = corpus::random_representation(rng, {5, 3, 5});
    const auto expected = brute_force_points(r, 20000);
    if (!expected) continue;
    ++compared;
    const std::vector<PointRecord> got = enumerate_points(r);
    CHECK(got == *expected);
    for (const PointRecord& p : got)
      for (std::size_t i = 0; i < r.group().torsion_count(); ++i)
        CHECK(denominator(Rational(p.point.values[r.group().free_rank() + i] * r.group().torsion()[i])) == 1);
  }
  CHECK(compared >= 40);
}

TEST_CASE("property: component counts and aes on the random corpus") {
  std::mt19937 rng(82);
  for (int trial = 0; trial < 100; ++trial) {
    const Representation r = corpus::random_representation(rng, {6, 4, 9});
    CHECK(verify_component_counts(r).ok);
    CHECK(verify_aes(r).ok);
  }
}

TEST_CASE("property: points do not depend on the order of bases") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const Representation r = corpus::random_representation(rng, {6, 3, 4});
    std::vector<Subset> order = bases(from_representation(r));
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(enumerate_points(r, order) == enumerate_points(r));
  }
}
