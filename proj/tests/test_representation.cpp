#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithmat/errors.hpp"
#include "arithmat/representation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"

#include <random>

using namespace arithmat;
using fixtures::set_of;

namespace {

void check_table(const ArithmeticMatroid& m, const std::map<std::string, long long>& expected) {
  for (const auto& [members, value] : expected) {
    CAPTURE(members);
    CHECK(m.multiplicity(set_of(members)) == value);
  }
}

// gcd of the maximal minors of [A~ | Q], by explicit enumeration.
Integer lifted_minor_gcd(const FgGroup& g, const std::vector<GroupElement>& a) {
  IntMatrix lifted(g.dimension(), a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < g.dimension(); ++i) lifted(i, j) = a[j].coords[i];
  return oracle::minor_gcd(lifted.hconcat(g.relation_block()));
}

}  // namespace

TEST_CASE("multiplicity table with torsion") {
  const ArithmeticMatroid m = from_representation(fixtures::free_torsion());
  CHECK(m.backing() == Backing::Representation);
  CHECK(m.rank() == 2);
  check_table(m, fixtures::free_torsion_table());
}

TEST_CASE("multiplicity table inside a saturated sublattice") {
  const Representation r = fixtures::rank_two_in_z3();
  CHECK(r.group() == FgGroup::free(2));
  const ArithmeticMatroid m = from_representation(r);
  CHECK(m.rank() == 2);
  check_table(m, fixtures::rank_two_table());
}

TEST_CASE("small lattice examples") {
  const ArithmeticMatroid sq = from_representation(fixtures::square());
  CHECK(sq.multiplicity(0) == 1);
  CHECK(sq.multiplicity(1) == 1);
  CHECK(sq.multiplicity(3) == 2);
  const ArithmeticMatroid tri = from_representation(fixtures::triangle());
  CHECK(tri.multiplicity(set_of("ab", "abc")) == 3);
  CHECK(tri.multiplicity(set_of("ac", "abc")) == 3);
  CHECK(tri.multiplicity(set_of("bc", "abc")) == 3);
  CHECK(tri.multiplicity(set_of("abc", "abc")) == 3);
}

TEST_CASE("representation validation") {
  CHECK_THROWS_AS(Representation(FgGroup::free(2), {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Representation(FgGroup::free(1), {{1}}, {"a", "b"}), std::invalid_argument);
  const Representation r(FgGroup(1, {Integer(3)}), {{1, 5}});
  CHECK(r.elements().front() == GroupElement{1, 2});
  CHECK(r.sublist(1).size() == 1);
}

TEST_CASE("gale dual of worked examples") {
  const Representation sq = fixtures::square();
  const Representation d = gale_dual(sq);
  CHECK(d.size() == 2);
  CHECK(d.group().free_rank() == 0);
  CHECK(d.group().torsion_order() == 2);
  CHECK(verify_dual_iso(sq).ok);
  CHECK(d.labels() == sq.labels());

  const Representation ft = fixtures::free_torsion();
  const Representation dft = gale_dual(ft);
  CHECK(dft.group().free_rank() == 2);
  const ArithmeticMatroid dm = from_representation(dft);
  CHECK(dm.multiplicity(0) == 4);
  CHECK(dm.multiplicity(set_of("cd")) == 24);
  CHECK(verify_dual_iso(ft).ok);
  CHECK(verify_dual_iso(fixtures::rank_two_in_z3()).ok);
  CHECK(verify_dual_iso(fixtures::triangle()).ok);
}

TEST_CASE("dual verification respects the cap") {
  CHECK_THROWS_AS(verify_dual_iso(fixtures::free_torsion(), 3), CapExceeded);
}

TEST_CASE("gcd and torsion-free predicates") {
  // With torsion the rule can fail: m(X) = 4 while the only basis has multiplicity 24.
  CHECK_FALSE(is_gcd(from_representation(fixtures::free_torsion())));
  CHECK(is_gcd(from_representation(fixtures::rank_two_in_z3())));
  CHECK_FALSE(is_torsion_free(from_representation(fixtures::free_torsion())));
  CHECK(is_torsion_free(from_representation(fixtures::rank_two_in_z3())));
  CHECK(is_torsion_free(from_representation(fixtures::square())));
  CHECK_FALSE(is_gcd(fixtures::not_gcd()));
  CHECK(is_gcd(fixtures::fano()));
}

TEST_CASE("property: multiplicities match lifted minors in a saturated ambient") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Representation r = corpus::random_representation(rng, {5, 3, 9});
    const ArithmeticMatroid m = from_representation(r);
    for (Subset s = 0; s <= m.ground(); ++s) {
      CHECK(m.multiplicity(s) == lifted_minor_gcd(r.group(), r.sublist(s)));
      if (s == m.ground()) break;
    }
  }
}

TEST_CASE("property: torsion-free representable matroids are gcd matroids") {
  std::mt19937 rng(52);
  int seen = 0;
  while (seen < 80) {
    const ArithmeticMatroid m = from_representation(corpus::random_representation(rng, {5, 3, 9}));
    if (!is_torsion_free(m)) continue;
    ++seen;
    CHECK(is_gcd(m));
  }
}

TEST_CASE("property: gale dual is a dual and the double dual returns the matroid") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const Representation r = corpus::random_representation(rng, {6, 4, 9});
    CHECK(verify_dual_iso(r).ok);
    const ArithmeticMatroid twice = from_representation(gale_dual(gale_dual(r)));
    CHECK(same_oracles(twice, from_representation(r)));
  }
}
