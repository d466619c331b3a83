#include "arithmat/representation.hpp"

#include "arithmat/errors.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

namespace arithmat {

Representation::Representation(FgGroup group, std::vector<GroupElement> elements,
                               std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (elements.size() > kMaxGroundSize) throw std::invalid_argument("too many elements");
  if (!labels_.empty() && labels_.size() != elements.size())
    throw std::invalid_argument("label count differs from element count");
  SaturatedAmbient sat = saturate_ambient(group, elements);
  group_ = std::move(sat.group);
  elements_ = std::move(sat.elements);
}

std::vector<GroupElement> Representation::sublist(Subset s) const {
  std::vector<GroupElement> out;
  for (std::size_t i : elements_of(s)) out.push_back(elements_[i]);
  return out;
}

namespace {

class RepresentationOracle final : public MatroidOracle {
 public:
  explicit RepresentationOracle(Representation r)
      : rep_(std::move(r)), memo_(std::size_t{1} << rep_.size()) {}

  std::size_t size() const override { return rep_.size(); }

  int rank(Subset s) const override { return static_cast<int>(entry(s).rank); }

  Integer multiplicity(Subset s) const override { return entry(s).multiplicity; }

  const MatroidTable& table() const override {
    std::call_once(table_once_, [this] {
      MatroidTable t;
      const std::size_t n = memo_.size();
      t.rank.resize(n);
      t.multiplicity.resize(n);
      for (Subset s = 0; s < n; ++s) {
        const SubgroupData& d = entry(s);
        t.rank[s] = static_cast<int>(d.rank);
        t.multiplicity[s] = d.multiplicity;
      }
      table_ = std::move(t);
    });
    return table_;
  }

 private:
  const SubgroupData& entry(Subset s) const {
    if (s >= memo_.size()) throw std::out_of_range("subset outside ground list");
    std::lock_guard<std::mutex> lock(mutex_);
    std::optional<SubgroupData>& slot = memo_[s];
    if (!slot) {
      const std::vector<GroupElement> sub = rep_.sublist(s);
      slot = subgroup_data(rep_.group(), sub);
    }
    return *slot;
  }

  Representation rep_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<SubgroupData>> memo_;
  mutable std::once_flag table_once_;
  mutable MatroidTable table_;
};

}  // namespace

ArithmeticMatroid from_representation(const Representation& r) {
  return ArithmeticMatroid::from_oracle(std::make_shared<RepresentationOracle>(r),
                                        Backing::Representation, r.labels());
}

Representation gale_dual(const Representation& r) {
  const FgGroup& g = r.group();
  const std::size_t k = r.size();
  const std::size_t s = g.torsion_count();
  const std::size_t n = g.dimension();

  // Columns: lifts of X in order, then q_1..q_s. Its rows live in Z^(k+s).
  IntMatrix columns(n, k + s);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) columns(i, j) = r.elements()[j].coords[i];
  const IntMatrix q = g.relation_block();
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < n; ++i) columns(i, k + j) = q(i, j);

  std::vector<GroupElement> relations;
  relations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) relations.emplace_back(columns.row(i));

  QuotientPresentation quotient = quotient_presentation(FgGroup::free(k + s), relations);
  std::vector<GroupElement> images;
  images.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    GroupElement unit(std::vector<Integer>(k + s, Integer(0)));
    unit.coords[j] = 1;
    images.push_back(quotient.map(unit));
  }
  return Representation(quotient.group, std::move(images), r.labels());
}

DualIsoResult verify_dual_iso(const Representation& r, std::size_t cap) {
  if (r.size() > cap) throw CapExceeded("verify_dual_iso", r.size(), cap);
  const ArithmeticMatroid expected = dual(from_representation(r));
  const ArithmeticMatroid actual = from_representation(gale_dual(r));
  DualIsoResult result;
  const MatroidTable& te = expected.table();
  const MatroidTable& ta = actual.table();
  for (Subset s = 0; s < te.rank.size(); ++s) {
    if (te.rank[s] == ta.rank[s] && te.multiplicity[s] == ta.multiplicity[s]) continue;
    result.ok = false;
    result.mismatches.push_back(
        {s, te.rank[s], ta.rank[s], te.multiplicity[s], ta.multiplicity[s]});
  }
  return result;
}

bool is_gcd(const ArithmeticMatroid& m) {
  const MatroidTable& t = m.table();
  const Subset x = m.ground();
  for (Subset a = 0;; ++a) {
    const int r = t.rank[a];
    Integer g = 0;
    for (Subset b = a;; b = (b - 1) & a) {
      if (cardinality(b) == r && t.rank[b] == r) g = gcd(g, t.multiplicity[b]);
      if (b == 0) break;
    }
    if (g != t.multiplicity[a]) return false;
    if (a == x) break;
  }
  return true;
}

bool is_torsion_free(const ArithmeticMatroid& m) { return m.multiplicity(0) == 1; }

}  // namespace arithmat
