#pragma once

#include "arithmat/integer.hpp"
#include "arithmat/subset.hpp"

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace arithmat {

/// Full rank and multiplicity tables indexed by subset bitmask.
struct MatroidTable {
  std::vector<int> rank;
  std::vector<Integer> multiplicity;
};

/// Source of rank and multiplicity values for a ground list of fixed size.
/// Implementations must be safe for concurrent readers.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual std::size_t size() const = 0;
  virtual int rank(Subset s) const = 0;
  virtual Integer multiplicity(Subset s) const = 0;
  /// All 2^k values; computed at most once.
  virtual const MatroidTable& table() const = 0;
};

enum class Backing { ExplicitTable, Representation };

/// A list of k ground elements with rank and multiplicity oracles. Values are
/// immutable once constructed; copies share the underlying oracle.
class ArithmeticMatroid {
 public:
  /// The empty matroid with m(empty) = 1.
  ArithmeticMatroid();

  /// Throws std::invalid_argument on size mismatches, k > kMaxGroundSize,
  /// a nonpositive multiplicity, or non-distinct labels.
  static ArithmeticMatroid from_table(std::size_t k, std::vector<int> rank,
                                      std::vector<Integer> multiplicity,
                                      std::vector<std::string> labels = {});
  static ArithmeticMatroid from_table(MatroidTable table, std::vector<std::string> labels = {});
  static ArithmeticMatroid from_oracle(std::shared_ptr<const MatroidOracle> oracle, Backing backing,
                                       std::vector<std::string> labels = {});

  std::size_t size() const { return oracle_->size(); }
  Subset ground() const { return full_set(size()); }
  Backing backing() const { return backing_; }

  int rank(Subset s) const { return oracle_->rank(s); }
  int rank() const { return oracle_->rank(ground()); }
  Integer multiplicity(Subset s) const { return oracle_->multiplicity(s); }
  const MatroidTable& table() const { return oracle_->table(); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of element i, or its decimal index when unlabeled.
  std::string label(std::size_t i) const;
  /// "{a,b}" style rendering of a subset.
  std::string format_subset(Subset s) const;

 private:
  std::shared_ptr<const MatroidOracle> oracle_;
  Backing backing_ = Backing::ExplicitTable;
  std::vector<std::string> labels_;
};

/// True when both matroids have the same size and agree on every rank and multiplicity.
bool same_oracles(const ArithmeticMatroid& a, const ArithmeticMatroid& b);

ArithmeticMatroid dual(const ArithmeticMatroid& m);
ArithmeticMatroid delete_element(const ArithmeticMatroid& m, std::size_t v);
ArithmeticMatroid contract_element(const ArithmeticMatroid& m, std::size_t v);
/// Ground list of m1 followed by that of m2.
ArithmeticMatroid direct_sum(const ArithmeticMatroid& m1, const ArithmeticMatroid& m2);
/// Keeps only the elements of s (deletion of the complement), in ground order.
ArithmeticMatroid restrict_to(const ArithmeticMatroid& m, Subset s);

enum class ElementKind { Free, Torsion, Proper };

const char* to_string(ElementKind kind);

ElementKind classify(const ArithmeticMatroid& m, std::size_t v);
bool is_molecule(const ArithmeticMatroid& m);

/// Alternating sum of m(T) over a <= T <= b. Throws PreconditionError unless a <= b.
Integer mu(const ArithmeticMatroid& m, Subset a, Subset b);
/// Alternating sum of m(X \ T) over a <= T <= b.
Integer mu_star(const ArithmeticMatroid& m, Subset a, Subset b);

/// Bases of the underlying matroid, in increasing bitmask order.
std::vector<Subset> bases(const ArithmeticMatroid& m);

// ---------------------------------------------------------------------------
// Axiom verification

enum class Axiom {
  RankBound,       // 0 <= rk(A) <= |A|, rk(empty) = 0
  RankMonotone,    // A <= B implies rk(A) <= rk(B)
  RankSubmodular,  // rk(A u B) + rk(A n B) <= rk(A) + rk(B)
  Divisibility1,   // v dependent on A: m(A u v) | m(A)
  Divisibility2,   // v independent on A: m(A) | m(A u v)
  Product3,        // m(A) m(B) = m(A u F) m(A u T) on molecular intervals
  Positivity4,     // mu_B(A) >= 0 when rk(A) = rk(B)
  Positivity5,     // mu*_B(A) >= 0 when rk*(A) = rk*(B)
};

inline constexpr Axiom kAllAxioms[] = {Axiom::RankBound,     Axiom::RankMonotone,
                                       Axiom::RankSubmodular, Axiom::Divisibility1,
                                       Axiom::Divisibility2, Axiom::Product3,
                                       Axiom::Positivity4,   Axiom::Positivity5};

const char* to_string(Axiom axiom);

inline constexpr std::size_t kNoElement = std::numeric_limits<std::size_t>::max();

/// Subsets exhibiting an axiom violation. Field use depends on the axiom:
/// rank/divisibility witnesses use a (and element); submodularity uses a, b;
/// product uses a, b, f, t; positivity uses a <= b.
struct AxiomWitness {
  Axiom axiom = Axiom::RankBound;
  Subset a = 0;
  Subset b = 0;
  Subset f = 0;
  Subset t = 0;
  std::size_t element = kNoElement;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomStatus {
  Axiom axiom = Axiom::RankBound;
  bool passed = true;
  std::size_t violations = 0;
  /// First few violations (at most AxiomCheckOptions::max_witnesses).
  std::vector<AxiomWitness> witnesses;

  friend bool operator==(const AxiomStatus&, const AxiomStatus&) = default;
};

struct AxiomReport {
  std::vector<AxiomStatus> statuses;

  bool all_passed() const;
  bool rank_axioms_passed() const;
  const AxiomStatus& status(Axiom axiom) const;
  std::vector<Axiom> failed() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

struct AxiomCheckOptions {
  std::size_t cap = 12;
  std::size_t max_witnesses = 8;
};

/// Exhaustive check of the rank axioms and multiplicity axioms (1)-(5) over
/// the whole power set. Throws CapExceeded when size() > options.cap.
AxiomReport check_axioms(const ArithmeticMatroid& m, const AxiomCheckOptions& options = {});

/// Re-evaluates a witness against m; true when it still exhibits a violation.
bool witness_violates(const ArithmeticMatroid& m, const AxiomWitness& w);

}  // namespace arithmat
