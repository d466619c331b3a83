#pragma once

#include "arithmat/polynomial.hpp"
#include "arithmat/representation.hpp"

#include <vector>

namespace arithmat {

/// Finite-order point of Hom(G, C*) written additively: coordinate j is a
/// fraction in [0,1) giving the value on the j-th generator of G.
struct TorusPoint {
  std::vector<Rational> values;

  /// Value of the character lambda at this point, reduced into [0,1).
  Rational pair(const GroupElement& lambda) const;
  /// True when lambda(p) is an integer, i.e. p lies on the kernel of lambda.
  bool on_kernel(const GroupElement& lambda) const { return pair(lambda) == 0; }
  std::string to_string() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.values < b.values; }
};

/// Fraction reduced into [0,1).
Rational reduce_mod_one(const Rational& q);

struct PointRecord {
  TorusPoint point;
  Subset x_p = 0;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// The m(B) common zeros of the characters in the basis B, in canonical order.
/// Throws PreconditionError unless B is a basis of the representation.
std::vector<TorusPoint> basis_points(const Representation& r, Subset basis);

/// Zero-dimensional layers of the arrangement, sorted, each with its list X_p.
/// `basis_order` optionally permutes the order in which bases are solved.
/// Throws PreconditionError when rk(X) is below the free rank of the group.
std::vector<PointRecord> enumerate_points(const Representation& r,
                                          const std::vector<Subset>& basis_order = {});

struct CountDiscrepancy {
  Subset sublist = 0;
  std::size_t points = 0;
  Integer multiplicity;

  friend bool operator==(const CountDiscrepancy&, const CountDiscrepancy&) = default;
};

struct ComponentCountReport {
  bool ok = true;
  std::vector<CountDiscrepancy> discrepancies;

  friend bool operator==(const ComponentCountReport&, const ComponentCountReport&) = default;
};

/// For every maximal-rank sublist A, the points whose X_p contains A number m(A).
ComponentCountReport verify_component_counts(const Representation& r);

struct AesReport {
  bool ok = true;
  UniPoly arithmetic;  // M_X(1, y)
  UniPoly local_sum;   // sum over points of T_{X_p}(1, y)

  friend bool operator==(const AesReport&, const AesReport&) = default;
};

AesReport verify_aes(const Representation& r);

}  // namespace arithmat
