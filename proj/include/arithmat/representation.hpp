#pragma once

#include "arithmat/abelian_group.hpp"
#include "arithmat/arith_matroid.hpp"

#include <string>
#include <vector>

namespace arithmat {

/// A finite list X of elements of a finitely generated abelian group G.
/// Construction canonicalizes the elements and saturates the ambient group,
/// so that rk(X) equals the free rank of group().
class Representation {
 public:
  Representation() = default;
  /// Throws std::invalid_argument if an element has the wrong length or the
  /// labels are malformed.
  Representation(FgGroup group, std::vector<GroupElement> elements,
                 std::vector<std::string> labels = {});

  const FgGroup& group() const { return group_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return elements_.size(); }

  /// Elements selected by a subset bitmask, in ground order.
  std::vector<GroupElement> sublist(Subset s) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  FgGroup group_;
  std::vector<GroupElement> elements_;
  std::vector<std::string> labels_;
};

/// Matroid whose oracles evaluate subgroup_data on demand (memoized, thread-safe).
ArithmeticMatroid from_representation(const Representation& r);

/// Dual representation built from the relation matrix [X~ | Q]: G' is Z^(k+s)
/// modulo its rows and X' is the image of the first k unit vectors.
Representation gale_dual(const Representation& r);

struct DualMismatch {
  Subset subset = 0;
  int expected_rank = 0;
  int actual_rank = 0;
  Integer expected_multiplicity;
  Integer actual_multiplicity;

  friend bool operator==(const DualMismatch&, const DualMismatch&) = default;
};

struct DualIsoResult {
  bool ok = true;
  std::vector<DualMismatch> mismatches;

  friend bool operator==(const DualIsoResult&, const DualIsoResult&) = default;
};

/// Compares the Gale dual's oracles with the abstract dual on every subset.
/// Throws CapExceeded when the ground list is larger than cap.
DualIsoResult verify_dual_iso(const Representation& r, std::size_t cap = 12);

/// Every m(A) equals the GCD of m(B) over maximal independent B <= A.
bool is_gcd(const ArithmeticMatroid& m);

bool is_torsion_free(const ArithmeticMatroid& m);

}  // namespace arithmat
