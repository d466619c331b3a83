#include "arithmat/arith_matroid.hpp"

#include "arithmat/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arithmat {

namespace {

class TableOracle final : public MatroidOracle {
 public:
  TableOracle(std::size_t k, MatroidTable table) : k_(k), table_(std::move(table)) {}

  std::size_t size() const override { return k_; }
  int rank(Subset s) const override { return table_.rank[s]; }
  Integer multiplicity(Subset s) const override { return table_.multiplicity[s]; }
  const MatroidTable& table() const override { return table_; }

 private:
  std::size_t k_;
  MatroidTable table_;
};

std::size_t ground_size_for(std::size_t entries) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < entries) ++k;
  if ((std::size_t{1} << k) != entries) throw std::invalid_argument("table size is not a power of two");
  return k;
}

void validate_labels(const std::vector<std::string>& labels, std::size_t k) {
  if (labels.empty()) return;
  if (labels.size() != k) throw std::invalid_argument("label count differs from ground size");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("labels must be distinct");
}

// Labels for a derived matroid; dropped when they would collide.
std::vector<std::string> join_labels(const ArithmeticMatroid& a, const ArithmeticMatroid& b) {
  if (!a.has_labels() || !b.has_labels()) return {};
  std::vector<std::string> out = a.labels();
  out.insert(out.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) return {};
  return out;
}

std::vector<std::string> drop_label(const ArithmeticMatroid& m, std::size_t v) {
  if (!m.has_labels()) return {};
  std::vector<std::string> out = m.labels();
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(v));
  return out;
}

void check_index(const ArithmeticMatroid& m, std::size_t v) {
  if (v >= m.size())
    throw std::out_of_range("element index " + std::to_string(v) + " outside ground of size " +
                            std::to_string(m.size()));
}

}  // namespace

ArithmeticMatroid::ArithmeticMatroid()
    : oracle_(std::make_shared<TableOracle>(0, MatroidTable{{0}, {Integer(1)}})) {}

ArithmeticMatroid ArithmeticMatroid::from_table(std::size_t k, std::vector<int> rank,
                                                std::vector<Integer> multiplicity,
                                                std::vector<std::string> labels) {
  if (k > kMaxGroundSize) throw std::invalid_argument("ground size exceeds supported maximum");
  const std::size_t n = std::size_t{1} << k;
  if (rank.size() != n || multiplicity.size() != n)
    throw std::invalid_argument("rank and multiplicity tables must have 2^k entries");
  for (const Integer& x : multiplicity)
    if (x < 1) throw std::invalid_argument("multiplicities must be positive integers");
  validate_labels(labels, k);
  ArithmeticMatroid m;
  m.oracle_ = std::make_shared<TableOracle>(k, MatroidTable{std::move(rank), std::move(multiplicity)});
  m.backing_ = Backing::ExplicitTable;
  m.labels_ = std::move(labels);
  return m;
}

ArithmeticMatroid ArithmeticMatroid::from_table(MatroidTable table, std::vector<std::string> labels) {
  const std::size_t k = ground_size_for(table.rank.size());
  return from_table(k, std::move(table.rank), std::move(table.multiplicity), std::move(labels));
}

ArithmeticMatroid ArithmeticMatroid::from_oracle(std::shared_ptr<const MatroidOracle> oracle,
                                                 Backing backing, std::vector<std::string> labels) {
  if (!oracle) throw std::invalid_argument("null oracle");
  validate_labels(labels, oracle->size());
  ArithmeticMatroid m;
  m.oracle_ = std::move(oracle);
  m.backing_ = backing;
  m.labels_ = std::move(labels);
  return m;
}

std::string ArithmeticMatroid::label(std::size_t i) const {
  return has_labels() ? labels_[i] : std::to_string(i);
}

std::string ArithmeticMatroid::format_subset(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : elements_of(s)) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  }
  return out + "}";
}

bool same_oracles(const ArithmeticMatroid& a, const ArithmeticMatroid& b) {
  if (a.size() != b.size()) return false;
  const MatroidTable& ta = a.table();
  const MatroidTable& tb = b.table();
  return ta.rank == tb.rank && ta.multiplicity == tb.multiplicity;
}

ArithmeticMatroid dual(const ArithmeticMatroid& m) {
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  const int total = t.rank[x];
  MatroidTable out;
  out.rank.resize(t.rank.size());
  out.multiplicity.resize(t.multiplicity.size());
  for (Subset a = 0; a <= x; ++a) {
    out.rank[a] = cardinality(a) - total + t.rank[x & ~a];
    out.multiplicity[a] = t.multiplicity[x & ~a];
    if (a == x) break;
  }
  return ArithmeticMatroid::from_table(m.size(), std::move(out.rank), std::move(out.multiplicity),
                                       m.labels());
}

ArithmeticMatroid delete_element(const ArithmeticMatroid& m, std::size_t v) {
  check_index(m, v);
  const MatroidTable& t = m.table();
  const std::size_t k = m.size() - 1;
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rank(n);
  std::vector<Integer> mult(n);
  for (Subset s = 0; s < n; ++s) {
    const Subset old = expand(s, v);
    rank[s] = t.rank[old];
    mult[s] = t.multiplicity[old];
  }
  return ArithmeticMatroid::from_table(k, std::move(rank), std::move(mult), drop_label(m, v));
}

ArithmeticMatroid contract_element(const ArithmeticMatroid& m, std::size_t v) {
  check_index(m, v);
  const MatroidTable& t = m.table();
  const std::size_t k = m.size() - 1;
  const std::size_t n = std::size_t{1} << k;
  const int rv = t.rank[singleton(v)];
  std::vector<int> rank(n);
  std::vector<Integer> mult(n);
  for (Subset s = 0; s < n; ++s) {
    const Subset old = expand(s, v) | singleton(v);
    rank[s] = t.rank[old] - rv;
    mult[s] = t.multiplicity[old];
  }
  return ArithmeticMatroid::from_table(k, std::move(rank), std::move(mult), drop_label(m, v));
}

ArithmeticMatroid direct_sum(const ArithmeticMatroid& m1, const ArithmeticMatroid& m2) {
  const std::size_t k1 = m1.size();
  const std::size_t k = k1 + m2.size();
  if (k > kMaxGroundSize) throw std::invalid_argument("direct sum exceeds supported ground size");
  const MatroidTable& t1 = m1.table();
  const MatroidTable& t2 = m2.table();
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rank(n);
  std::vector<Integer> mult(n);
  const Subset low = full_set(k1);
  for (Subset s = 0; s < n; ++s) {
    const Subset a = s & low;
    const Subset b = s >> k1;
    rank[s] = t1.rank[a] + t2.rank[b];
    mult[s] = t1.multiplicity[a] * t2.multiplicity[b];
  }
  return ArithmeticMatroid::from_table(k, std::move(rank), std::move(mult), join_labels(m1, m2));
}

ArithmeticMatroid restrict_to(const ArithmeticMatroid& m, Subset s) {
  if (!is_subset(s, m.ground())) throw std::out_of_range("restriction outside ground list");
  const std::vector<std::size_t> keep = elements_of(s);
  const MatroidTable& t = m.table();
  const std::size_t k = keep.size();
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rank(n);
  std::vector<Integer> mult(n);
  for (Subset a = 0; a < n; ++a) {
    Subset old = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (contains(a, i)) old |= singleton(keep[i]);
    rank[a] = t.rank[old];
    mult[a] = t.multiplicity[old];
  }
  std::vector<std::string> labels;
  if (m.has_labels())
    for (std::size_t i : keep) labels.push_back(m.labels()[i]);
  return ArithmeticMatroid::from_table(k, std::move(rank), std::move(mult), std::move(labels));
}

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Free: return "free";
    case ElementKind::Torsion: return "torsion";
    case ElementKind::Proper: return "proper";
  }
  return "?";
}

ElementKind classify(const ArithmeticMatroid& m, std::size_t v) {
  check_index(m, v);
  const Subset x = m.ground();
  if (m.rank(x & ~singleton(v)) == m.rank(x) - 1) return ElementKind::Free;
  if (m.rank(singleton(v)) == 0) return ElementKind::Torsion;
  return ElementKind::Proper;
}

bool is_molecule(const ArithmeticMatroid& m) {
  for (std::size_t v = 0; v < m.size(); ++v)
    if (classify(m, v) == ElementKind::Proper) return false;
  return true;
}

namespace {

template <class Value>
Integer alternating_interval_sum(Subset a, Subset b, Value value) {
  if (!is_subset(a, b)) throw PreconditionError("mu: first subset is not contained in the second");
  const Subset free_bits = b & ~a;
  Integer sum = 0;
  Subset extra = free_bits;
  for (;;) {
    if (cardinality(extra) % 2 == 0)
      sum += value(a | extra);
    else
      sum -= value(a | extra);
    if (extra == 0) break;
    extra = (extra - 1) & free_bits;
  }
  return sum;
}

}  // namespace

Integer mu(const ArithmeticMatroid& m, Subset a, Subset b) {
  if (!is_subset(b, m.ground())) throw PreconditionError("mu: subset outside ground list");
  const MatroidTable& t = m.table();
  return alternating_interval_sum(a, b, [&](Subset s) -> const Integer& { return t.multiplicity[s]; });
}

Integer mu_star(const ArithmeticMatroid& m, Subset a, Subset b) {
  if (!is_subset(b, m.ground())) throw PreconditionError("mu_star: subset outside ground list");
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  return alternating_interval_sum(
      a, b, [&](Subset s) -> const Integer& { return t.multiplicity[x & ~s]; });
}

std::vector<Subset> bases(const ArithmeticMatroid& m) {
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  const int r = t.rank[x];
  std::vector<Subset> out;
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == r && t.rank[s] == r) out.push_back(s);
    if (s == x) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::RankBound: return "rank-bound";
    case Axiom::RankMonotone: return "rank-monotone";
    case Axiom::RankSubmodular: return "rank-submodular";
    case Axiom::Divisibility1: return "axiom-1";
    case Axiom::Divisibility2: return "axiom-2";
    case Axiom::Product3: return "axiom-3";
    case Axiom::Positivity4: return "axiom-4";
    case Axiom::Positivity5: return "axiom-5";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  return std::all_of(statuses.begin(), statuses.end(), [](const AxiomStatus& s) { return s.passed; });
}

bool AxiomReport::rank_axioms_passed() const {
  return status(Axiom::RankBound).passed && status(Axiom::RankMonotone).passed &&
         status(Axiom::RankSubmodular).passed;
}

const AxiomStatus& AxiomReport::status(Axiom axiom) const {
  for (const AxiomStatus& s : statuses)
    if (s.axiom == axiom) return s;
  throw std::out_of_range("axiom not present in report");
}

std::vector<Axiom> AxiomReport::failed() const {
  std::vector<Axiom> out;
  for (const AxiomStatus& s : statuses)
    if (!s.passed) out.push_back(s.axiom);
  return out;
}

namespace {

// Is every C in [a, a|f|t] of rank rk(a) + |C n f|?
bool molecular_interval_literal(const MatroidTable& t, Subset a, Subset f, Subset tor) {
  const int base = t.rank[a];
  const Subset span = f | tor;
  Subset extra = span;
  for (;;) {
    if (t.rank[a | extra] != base + cardinality(extra & f)) return false;
    if (extra == 0) return true;
    extra = (extra - 1) & span;
  }
}

bool divides(const Integer& d, const Integer& n) { return n % d == 0; }

class AxiomChecker {
 public:
  AxiomChecker(const ArithmeticMatroid& m, const AxiomCheckOptions& options)
      : t_(m.table()), k_(m.size()), x_(m.ground()), options_(options) {
    for (Axiom a : kAllAxioms) report_.statuses.push_back(AxiomStatus{a, true, 0, {}});
  }

  AxiomReport run() {
    check_rank();
    check_divisibility();
    check_product();
    check_positivity();
    return std::move(report_);
  }

 private:
  void record(const AxiomWitness& w) {
    for (AxiomStatus& s : report_.statuses) {
      if (s.axiom != w.axiom) continue;
      s.passed = false;
      ++s.violations;
      if (s.witnesses.size() < options_.max_witnesses) s.witnesses.push_back(w);
      return;
    }
  }

  int rk(Subset s) const { return t_.rank[s]; }
  const Integer& mult(Subset s) const { return t_.multiplicity[s]; }

  template <class F>
  void for_each_subset(F&& f) const {
    for (Subset s = 0;; ++s) {
      f(s);
      if (s == x_) break;
    }
  }

  void check_rank() {
    for_each_subset([&](Subset a) {
      if (rk(a) < 0 || rk(a) > cardinality(a) || (a == 0 && rk(a) != 0))
        record({Axiom::RankBound, a, 0, 0, 0, kNoElement});
      for (std::size_t v = 0; v < k_; ++v) {
        if (contains(a, v)) continue;
        const Subset av = a | singleton(v);
        if (rk(av) < rk(a)) record({Axiom::RankMonotone, a, av, 0, 0, v});
        for (std::size_t w = v + 1; w < k_; ++w) {
          if (contains(a, w)) continue;
          const Subset aw = a | singleton(w);
          if (rk(av | aw) + rk(a) > rk(av) + rk(aw))
            record({Axiom::RankSubmodular, av, aw, 0, 0, kNoElement});
        }
      }
    });
    rank_valid_ = report_.rank_axioms_passed();
  }

  void check_divisibility() {
    for_each_subset([&](Subset a) {
      for (std::size_t v = 0; v < k_; ++v) {
        if (contains(a, v)) continue;
        const Subset av = a | singleton(v);
        if (rk(av) == rk(a)) {
          if (!divides(mult(av), mult(a))) record({Axiom::Divisibility1, a, 0, 0, 0, v});
        } else if (rk(av) == rk(a) + 1) {
          if (!divides(mult(a), mult(av))) record({Axiom::Divisibility2, a, 0, 0, 0, v});
        }
      }
    });
  }

  // Triples (A, F, T) with F, T nonempty; empty F or T make the identity trivial.
  void check_product() {
    for_each_subset([&](Subset a) {
      const Subset rest = x_ & ~a;
      Subset loops = 0;
      if (rank_valid_) {
        for (std::size_t v : elements_of(rest))
          if (rk(a | singleton(v)) == rk(a)) loops |= singleton(v);
      } else {
        loops = rest;
      }
      for (Subset tor = loops; tor != 0; tor = (tor - 1) & loops) {
        const Subset avail = rest & ~tor;
        for (Subset f = avail; f != 0; f = (f - 1) & avail) {
          const Subset b = a | f | tor;
          bool molecular;
          if (rank_valid_) {
            molecular = rk(a | f) == rk(a) + cardinality(f);
          } else {
            molecular = molecular_interval_literal(t_, a, f, tor);
          }
          if (!molecular) continue;
          if (mult(a) * mult(b) != mult(a | f) * mult(a | tor))
            record({Axiom::Product3, a, b, f, tor, kNoElement});
        }
      }
    });
  }

  // For every B, Mobius-transform the values over the subsets of B to get
  // mu_B(A) for all A <= B at once.
  void check_positivity() {
    const int total = rk(x_);
    auto rk_star = [&](Subset s) { return cardinality(s) - total + rk(x_ & ~s); };
    std::vector<Integer> primal;
    std::vector<Integer> dual;
    for_each_subset([&](Subset b) {
      const std::vector<std::size_t> elems = elements_of(b);
      const std::size_t n = std::size_t{1} << elems.size();
      primal.assign(n, Integer(0));
      dual.assign(n, Integer(0));
      std::vector<Subset> sub(n);
      for (std::size_t idx = 0; idx < n; ++idx) {
        Subset s = 0;
        for (std::size_t j = 0; j < elems.size(); ++j)
          if ((idx >> j) & 1U) s |= singleton(elems[j]);
        sub[idx] = s;
        primal[idx] = mult(s);
        dual[idx] = mult(x_ & ~s);
      }
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t idx = 0; idx < n; ++idx) {
          if (idx & bit) continue;
          primal[idx] -= primal[idx | bit];
          dual[idx] -= dual[idx | bit];
        }
      }
      for (std::size_t idx = 0; idx < n; ++idx) {
        const Subset a = sub[idx];
        if (rk(a) == rk(b) && primal[idx] < 0) record({Axiom::Positivity4, a, b, 0, 0, kNoElement});
        if (rk_star(a) == rk_star(b) && dual[idx] < 0)
          record({Axiom::Positivity5, a, b, 0, 0, kNoElement});
      }
    });
  }

  const MatroidTable& t_;
  std::size_t k_;
  Subset x_;
  AxiomCheckOptions options_;
  AxiomReport report_;
  bool rank_valid_ = true;
};

}  // namespace

AxiomReport check_axioms(const ArithmeticMatroid& m, const AxiomCheckOptions& options) {
  if (m.size() > options.cap) throw CapExceeded("check_axioms", m.size(), options.cap);
  return AxiomChecker(m, options).run();
}

bool witness_violates(const ArithmeticMatroid& m, const AxiomWitness& w) {
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  auto in_ground = [&](Subset s) { return is_subset(s, x); };
  if (!in_ground(w.a) || !in_ground(w.b) || !in_ground(w.f) || !in_ground(w.t)) return false;
  auto rk = [&](Subset s) { return t.rank[s]; };
  auto mult = [&](Subset s) -> const Integer& { return t.multiplicity[s]; };
  switch (w.axiom) {
    case Axiom::RankBound:
      return rk(w.a) < 0 || rk(w.a) > cardinality(w.a) || (w.a == 0 && rk(w.a) != 0);
    case Axiom::RankMonotone:
      return is_subset(w.a, w.b) && rk(w.b) < rk(w.a);
    case Axiom::RankSubmodular:
      return rk(w.a | w.b) + rk(w.a & w.b) > rk(w.a) + rk(w.b);
    case Axiom::Divisibility1: {
      if (w.element >= m.size()) return false;
      const Subset av = w.a | singleton(w.element);
      return rk(av) == rk(w.a) && mult(w.a) % mult(av) != 0;
    }
    case Axiom::Divisibility2: {
      if (w.element >= m.size()) return false;
      const Subset av = w.a | singleton(w.element);
      return rk(av) == rk(w.a) + 1 && mult(av) % mult(w.a) != 0;
    }
    case Axiom::Product3: {
      const bool disjoint = (w.a & w.f) == 0 && (w.a & w.t) == 0 && (w.f & w.t) == 0;
      if (!disjoint || w.b != (w.a | w.f | w.t)) return false;
      if (!molecular_interval_literal(t, w.a, w.f, w.t)) return false;
      return mult(w.a) * mult(w.b) != mult(w.a | w.f) * mult(w.a | w.t);
    }
    case Axiom::Positivity4:
      return is_subset(w.a, w.b) && rk(w.a) == rk(w.b) && mu(m, w.a, w.b) < 0;
    case Axiom::Positivity5: {
      const int total = rk(x);
      auto rk_star = [&](Subset s) { return cardinality(s) - total + rk(x & ~s); };
      return is_subset(w.a, w.b) && rk_star(w.a) == rk_star(w.b) && mu_star(m, w.a, w.b) < 0;
    }
  }
  return false;
}

}  // namespace arithmat
