#pragma once

#include "arithmat/exact_linalg.hpp"
#include "arithmat/integer.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace arithmat {

/// Element of Z^r + Z/d_1 + ... + Z/d_s, stored as an integer vector of length r+s.
struct GroupElement {
  std::vector<Integer> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<Integer> c) : coords(std::move(c)) {}
  GroupElement(std::initializer_list<long long> c);

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_s in invariant-factor
/// form (every d_i >= 2 and d_i | d_{i+1}).
class FgGroup {
 public:
  FgGroup() = default;
  /// Throws std::invalid_argument if the torsion list is not a divisibility chain of
  /// integers >= 2.
  FgGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FgGroup free(std::size_t rank) { return FgGroup(rank, {}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t torsion_count() const { return torsion_.size(); }
  /// Length r+s of element coordinate vectors.
  std::size_t dimension() const { return free_rank_ + torsion_.size(); }
  Integer torsion_order() const;
  bool is_free() const { return torsion_.empty(); }

  /// Reduces torsion coordinates into [0, d_i). Throws on a length mismatch.
  GroupElement canonical(const GroupElement& e) const;
  bool contains(const GroupElement& e) const { return e.size() == dimension(); }

  /// The (r+s) x s matrix whose i-th column is q_i = d_i e_{r+i}.
  IntMatrix relation_block() const;

  friend bool operator==(const FgGroup&, const FgGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

struct SubgroupData {
  std::size_t rank = 0;
  Integer multiplicity = 1;
};

/// Rank of <a> and its index in the maximal subgroup where it has finite index,
/// both read off the lifted matrix [a | Q].
SubgroupData subgroup_data(const FgGroup& g, std::span<const GroupElement> a);

/// Homomorphism from a group presented on Z^n into a quotient in standard form:
/// x -> (projection * x) with coordinate i reduced modulo moduli[i] (0 = free).
struct ElementMap {
  IntMatrix projection;
  std::vector<Integer> moduli;

  GroupElement operator()(const GroupElement& e) const;
};

struct QuotientPresentation {
  FgGroup group;
  ElementMap map;
};

/// G / <h> in invariant-factor form together with the induced map on elements.
QuotientPresentation quotient_presentation(const FgGroup& g, std::span<const GroupElement> h);

struct SaturatedAmbient {
  FgGroup group;
  std::vector<GroupElement> elements;
};

/// Replaces the free part of g by the saturation of the free projection of <x>,
/// re-expressing x in a basis of it; torsion coordinates are carried unchanged.
/// When x already has full free rank the coordinates are left untouched.
SaturatedAmbient saturate_ambient(const FgGroup& g, std::span<const GroupElement> x);

}  // namespace arithmat
