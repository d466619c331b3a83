#include "arithmat/activity.hpp"

#include "arithmat/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arithmat {

ElementOrder ElementOrder::identity(std::size_t k) {
  std::vector<std::size_t> seq(k);
  for (std::size_t i = 0; i < k; ++i) seq[i] = i;
  return from_sequence(std::move(seq));
}

ElementOrder ElementOrder::from_sequence(std::vector<std::size_t> sequence) {
  ElementOrder o;
  o.position_.assign(sequence.size(), sequence.size());
  for (std::size_t p = 0; p < sequence.size(); ++p) {
    const std::size_t e = sequence[p];
    if (e >= sequence.size() || o.position_[e] != sequence.size())
      throw PreconditionError("element order is not a permutation of the ground list");
    o.position_[e] = p;
  }
  o.sequence_ = std::move(sequence);
  return o;
}

Subset ElementOrder::after(Subset s, std::size_t v) const {
  Subset out = 0;
  for (std::size_t e : elements_of(s))
    if (position_[e] > position_[v]) out |= singleton(e);
  return out;
}

ElementOrder ElementOrder::without(std::size_t v) const {
  std::vector<std::size_t> seq;
  seq.reserve(sequence_.size() - 1);
  for (std::size_t e : sequence_) {
    if (e == v) continue;
    seq.push_back(e > v ? e - 1 : e);
  }
  return from_sequence(std::move(seq));
}

Integer Matching::total() const {
  Integer sum = 0;
  for (const MatchEntry& e : entries) sum += e.count;
  return sum;
}

BiPoly Matching::polynomial() const {
  BiPoly p;
  for (const MatchEntry& e : entries)
    p.add_term(static_cast<unsigned>(cardinality(dual[e.dual].active)),
               static_cast<unsigned>(cardinality(primal[e.primal].active)), e.count);
  return p;
}

namespace {

bool is_basis(const ArithmeticMatroid& m, Subset b) {
  if (!is_subset(b, m.ground())) return false;
  const int r = m.rank();
  return cardinality(b) == r && m.rank(b) == r;
}

void require_basis(const ArithmeticMatroid& m, Subset b) {
  if (!is_basis(m, b)) throw PreconditionError("subset " + m.format_subset(b) + " is not a basis");
}

void require_order(const ArithmeticMatroid& m, const ElementOrder& order) {
  if (order.size() != m.size()) throw PreconditionError("element order size differs from ground size");
}

// mu(S) for every S, by a superset Mobius transform of the multiplicity table.
std::vector<Integer> all_mu(const MatroidTable& t, std::size_t k) {
  std::vector<Integer> f = t.multiplicity;
  for (std::size_t j = 0; j < k; ++j) {
    const Subset bit = singleton(j);
    for (Subset s = 0; s < f.size(); ++s)
      if (!(s & bit)) f[s] -= f[s | bit];
  }
  return f;
}

std::vector<WeightedSublist> weighted_list(const ArithmeticMatroid& m) {
  const MatroidTable& t = m.table();
  const std::vector<Integer> weights = all_mu(t, m.size());
  const int r = m.rank();
  std::vector<WeightedSublist> out;
  for (Subset s = 0; s < weights.size(); ++s)
    if (t.rank[s] == r && weights[s] > 0) out.push_back({s, weights[s]});
  std::sort(out.begin(), out.end(), [](const WeightedSublist& a, const WeightedSublist& b) {
    if (cardinality(a.sublist) != cardinality(b.sublist))
      return cardinality(a.sublist) > cardinality(b.sublist);
    return elements_of(a.sublist) < elements_of(b.sublist);
  });
  return out;
}

Subset map_back(Subset s, const std::vector<std::size_t>& original) {
  Subset out = 0;
  for (std::size_t i : elements_of(s)) out |= singleton(original[i]);
  return out;
}

}  // namespace

std::size_t external_activity(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis,
                              Subset t) {
  require_order(m, order);
  require_basis(m, basis);
  if (!is_subset(basis, t) || !is_subset(t, m.ground()))
    throw PreconditionError("external_activity: basis must be contained in the sublist");
  if (m.rank(t) != m.rank()) throw PreconditionError("external_activity: sublist is not of maximal rank");
  return static_cast<std::size_t>(cardinality(active_elements(m, order, basis) & t));
}

Subset active_elements(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis) {
  require_order(m, order);
  Subset active = 0;
  for (std::size_t v : elements_of(m.ground() & ~basis)) {
    const Subset tail = order.after(basis, v);
    if (m.rank(tail | singleton(v)) == m.rank(tail)) active |= singleton(v);
  }
  return active;
}

ActivityLists build_lists(const ArithmeticMatroid& m) {
  return {weighted_list(m), weighted_list(dual(m))};
}

Matching molecular_matching(const ArithmeticMatroid& m, Subset basis) {
  if (!is_molecule(m)) throw PreconditionError("molecular_matching: matroid has proper elements");
  require_basis(m, basis);
  const Subset complement = m.ground() & ~basis;
  const ActivityLists lists = build_lists(m);
  const Integer mb = m.multiplicity(basis);

  Matching out;
  out.basis = basis;
  for (const WeightedSublist& w : lists.primal)
    if (is_subset(basis, w.sublist)) out.primal.push_back({basis, w.sublist & ~basis, w.weight});
  for (const WeightedSublist& w : lists.dual)
    if (is_subset(complement, w.sublist))
      out.dual.push_back({complement, w.sublist & ~complement, w.weight});

  for (std::size_t i = 0; i < out.primal.size(); ++i)
    for (std::size_t j = 0; j < out.dual.size(); ++j) {
      const Integer product = out.primal[i].weight * out.dual[j].weight;
      if (product % mb != 0)
        throw std::domain_error("molecular_matching: non-integral count; invalid multiplicities");
      out.entries.push_back({i, j, product / mb});
    }
  return out;
}

Matching psi_matching(const ArithmeticMatroid& m, const ElementOrder& order, Subset basis) {
  require_order(m, order);
  require_basis(m, basis);

  ArithmeticMatroid current = ArithmeticMatroid::from_table(m.table());
  ElementOrder current_order = order;
  Subset current_basis = basis;
  std::vector<std::size_t> original(m.size());
  for (std::size_t i = 0; i < original.size(); ++i) original[i] = i;

  for (;;) {
    std::size_t proper = kNoElement;
    const auto& seq = current_order.sequence();
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
      if (classify(current, *it) == ElementKind::Proper) {
        proper = *it;
        break;
      }
    if (proper == kNoElement) break;

    if (contains(current_basis, proper)) {
      current = contract_element(current, proper);
    } else {
      current = delete_element(current, proper);
    }
    current_basis = squeeze(current_basis & ~singleton(proper), proper);
    current_order = current_order.without(proper);
    original.erase(original.begin() + static_cast<std::ptrdiff_t>(proper));
  }

  Matching reduced = molecular_matching(current, current_basis);
  Matching out;
  out.basis = basis;
  const Subset complement = m.ground() & ~basis;
  for (const PairClass& c : reduced.primal)
    out.primal.push_back({basis, map_back(c.active, original), c.weight});
  for (const PairClass& c : reduced.dual)
    out.dual.push_back({complement, map_back(c.active, original), c.weight});
  out.entries = std::move(reduced.entries);
  return out;
}

BiPoly mbar(const ArithmeticMatroid& m, const ElementOrder& order) {
  require_order(m, order);
  BiPoly total;
  for (Subset b : bases(m)) total += psi_matching(m, order, b).polynomial();
  return total;
}

}  // namespace arithmat
