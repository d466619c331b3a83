#pragma once

#include "arithmat/arith_matroid.hpp"
#include "arithmat/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace arithmat {

/// Total order on the ground list: sequence()[0] is the smallest element.
class ElementOrder {
 public:
  /// Input order 0 < 1 < ... < k-1.
  static ElementOrder identity(std::size_t k);
  /// Throws PreconditionError unless `sequence` is a permutation of 0..k-1.
  static ElementOrder from_sequence(std::vector<std::size_t> sequence);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  std::size_t position(std::size_t element) const { return position_[element]; }
  bool less(std::size_t a, std::size_t b) const { return position_[a] < position_[b]; }
  /// Elements of s strictly greater than v.
  Subset after(Subset s, std::size_t v) const;

  /// Order induced on the ground list with element v removed (indices above v shift down).
  ElementOrder without(std::size_t v) const;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// A maximal-rank sublist together with its weight mu(T) (or mu*(T) in the dual).
struct WeightedSublist {
  Subset sublist = 0;
  Integer weight;

  friend bool operator==(const WeightedSublist&, const WeightedSublist&) = default;
};

struct ActivityLists {
  std::vector<WeightedSublist> primal;  // L_X
  std::vector<WeightedSublist> dual;    // L_X*

  friend bool operator==(const ActivityLists&, const ActivityLists&) = default;
};

/// Pairs (B, T) grouped by the externally active elements of T. For dual
/// classes `basis` is the complement B^c and `active` lies inside B.
struct PairClass {
  Subset basis = 0;
  Subset active = 0;
  Integer weight;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

struct MatchEntry {
  std::size_t primal = 0;  // index into Matching::primal
  std::size_t dual = 0;    // index into Matching::dual
  Integer count;

  friend bool operator==(const MatchEntry&, const MatchEntry&) = default;
};

/// Equidistributed matching between the primal and dual pair classes of one basis.
struct Matching {
  Subset basis = 0;
  std::vector<PairClass> primal;
  std::vector<PairClass> dual;
  std::vector<MatchEntry> entries;

  Integer total() const;
  /// x^{|dual active|} y^{|primal active|} summed with multiplicity count.
  BiPoly polynomial() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Number of elements of T \ B externally active on B: v is active when it is
/// dependent on the elements of B that follow it in `order`.
/// Throws PreconditionError unless B is a basis, B <= T and rk(T) = rk(X).
std::size_t external_activity(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis,
                              Subset t);

/// Elements of X \ B externally active on B.
Subset active_elements(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis);

/// L_X and L_X*: maximal-rank sublists with positive weight, largest first.
ActivityLists build_lists(const ArithmeticMatroid& m);

/// Proportional matching l(T, T~) = mu(T) mu*(T~) / m(B) on a molecule.
/// Throws PreconditionError if m has a proper element or `basis` is not its
/// basis, and std::domain_error if some count is not an integer.
Matching molecular_matching(const ArithmeticMatroid& m, Subset basis);

/// Reduces the greatest proper element (contract if in B, delete otherwise)
/// until a molecule remains, then matches there and maps classes back to the
/// original ground list.
Matching psi_matching(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis);

/// Sum over bases of their matchings' polynomials.
BiPoly mbar(const ArithmeticMatroid& m, const ElementOrder& order);

}  // namespace arithmat
