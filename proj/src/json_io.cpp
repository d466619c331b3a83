#include "arithmat/json_io.hpp"

#include "arithmat/errors.hpp"

void nlohmann::adl_serializer<arithmat::Integer>::from_json(const json& j, arithmat::Integer& v) {
  if (j.is_number_integer()) {
    v = j.is_number_unsigned() ? arithmat::Integer(j.get<std::uint64_t>())
                               : arithmat::Integer(j.get<std::int64_t>());
    return;
  }
  if (!j.is_string())
    throw arithmat::InputError(arithmat::InputError::Kind::InvalidValue,
                               "expected an integer or a decimal string, got " + j.dump());
  try {
    v = arithmat::parse_integer(j.get_ref<const std::string&>());
  } catch (const std::invalid_argument&) {
    throw arithmat::InputError(arithmat::InputError::Kind::InvalidValue,
                               "not a decimal integer: " + j.dump());
  }
}

void nlohmann::adl_serializer<arithmat::Rational>::from_json(const json& j, arithmat::Rational& v) {
  if (!j.is_string())
    throw arithmat::InputError(arithmat::InputError::Kind::InvalidValue,
                               "expected a fraction string, got " + j.dump());
  const std::string& s = j.get_ref<const std::string&>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      v = arithmat::Rational(arithmat::parse_integer(s));
    } else {
      const arithmat::Integer den = arithmat::parse_integer(std::string_view(s).substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      v = arithmat::Rational(arithmat::parse_integer(std::string_view(s).substr(0, slash)), den);
    }
  } catch (const std::invalid_argument&) {
    throw arithmat::InputError(arithmat::InputError::Kind::InvalidValue, "not a fraction: " + s);
  }
}

namespace arithmat {

namespace {

using Kind = InputError::Kind;

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(Kind::InvalidValue, "expected an object, got " + j.dump());
  auto it = j.find(key);
  if (it == j.end()) throw InputError(Kind::MissingKey, std::string("missing key \"") + key + "\"");
  return *it;
}

template <class T>
T need_as(const Json& j, const char* key) {
  const Json& v = need(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(Kind::InvalidValue, std::string("bad value for \"") + key + "\": " + v.dump());
  }
}

std::vector<std::string> optional_labels(const Json& j) {
  auto it = j.find("labels");
  if (it == j.end() || it->is_null()) return {};
  try {
    return it->get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(Kind::InvalidValue, "labels must be a list of strings");
  }
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned()) throw InputError(Kind::InvalidValue, "expected an index, got " + j.dump());
  return j.get<std::size_t>();
}

Integer integer_from(const Json& j) { return j.get<Integer>(); }

Axiom axiom_from_string(const std::string& s) {
  for (Axiom a : kAllAxioms)
    if (s == to_string(a)) return a;
  throw InputError(Kind::InvalidValue, "unknown axiom \"" + s + "\"");
}

MatroidInput explicit_from_json(const Json& j) {
  const std::size_t k = need_as<std::size_t>(j, "k");
  if (k > kMaxGroundSize)
    throw InputError(Kind::InvalidValue, "k exceeds the supported maximum of " +
                                             std::to_string(kMaxGroundSize));
  const Json& rank_obj = need(j, "rank");
  const Json& mult_obj = need(j, "multiplicity");
  if (!rank_obj.is_object() || !mult_obj.is_object())
    throw InputError(Kind::InvalidValue, "rank and multiplicity must be objects keyed by bitmask");
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> rank(n);
  std::vector<Integer> mult(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::string key = std::to_string(s);
    auto r = rank_obj.find(key);
    if (r == rank_obj.end())
      throw InputError(Kind::MissingKey, "rank table is missing key \"" + key + "\"");
    auto m = mult_obj.find(key);
    if (m == mult_obj.end())
      throw InputError(Kind::MissingKey, "multiplicity table is missing key \"" + key + "\"");
    if (!r->is_number_integer()) throw InputError(Kind::InvalidValue, "rank of " + key + " is not an integer");
    rank[s] = r->get<int>();
    mult[s] = integer_from(*m);
  }
  if (rank_obj.size() != n || mult_obj.size() != n)
    throw InputError(Kind::InvalidValue, "tables must have exactly 2^k keys");
  try {
    return {ArithmeticMatroid::from_table(k, std::move(rank), std::move(mult), optional_labels(j)), {}};
  } catch (const std::invalid_argument& e) {
    throw InputError(Kind::InvalidValue, e.what());
  }
}

MatroidInput representation_from_json(const Json& j) {
  const Json& g = need(j, "group");
  const std::size_t free_rank = need_as<std::size_t>(g, "free_rank");
  std::vector<Integer> torsion;
  if (auto it = g.find("torsion"); it != g.end()) {
    if (!it->is_array()) throw InputError(Kind::InvalidValue, "torsion must be a list");
    for (const Json& d : *it) torsion.push_back(integer_from(d));
  }
  const Json& elems = need(j, "elements");
  if (!elems.is_array()) throw InputError(Kind::InvalidValue, "elements must be a list of vectors");
  if (elems.size() > kMaxGroundSize)
    throw InputError(Kind::InvalidValue, "more elements than the supported maximum of " +
                                             std::to_string(kMaxGroundSize));
  std::vector<GroupElement> elements;
  for (const Json& e : elems) {
    if (!e.is_array()) throw InputError(Kind::InvalidValue, "element is not a vector: " + e.dump());
    std::vector<Integer> coords;
    for (const Json& c : e) coords.push_back(integer_from(c));
    elements.emplace_back(std::move(coords));
  }
  try {
    Representation r(FgGroup(free_rank, std::move(torsion)), std::move(elements), optional_labels(j));
    return {from_representation(r), r};
  } catch (const std::invalid_argument& e) {
    throw InputError(Kind::InvalidValue, e.what());
  }
}

}  // namespace

MatroidInput parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(Kind::MalformedJson, e.what());
  }
  return input_from_json(j);
}

MatroidInput input_from_json(const Json& j) {
  const std::string kind = need_as<std::string>(j, "kind");
  if (kind == "explicit") return explicit_from_json(j);
  if (kind == "representation") return representation_from_json(j);
  throw InputError(Kind::InvalidValue, "kind must be \"explicit\" or \"representation\", got \"" + kind + "\"");
}

Json explicit_json(const ArithmeticMatroid& m) {
  const MatroidTable& t = m.table();
  Json rank = Json::object();
  Json mult = Json::object();
  for (std::size_t s = 0; s < t.rank.size(); ++s) {
    rank[std::to_string(s)] = t.rank[s];
    mult[std::to_string(s)] = t.multiplicity[s];
  }
  Json j = {{"kind", "explicit"}, {"k", m.size()}, {"rank", rank}, {"multiplicity", mult}};
  if (m.has_labels()) j["labels"] = m.labels();
  return j;
}

Json representation_json(const Representation& r) {
  Json elems = Json::array();
  for (const GroupElement& e : r.elements()) elems.push_back(e.coords);
  Json j = {{"kind", "representation"},
            {"group", {{"free_rank", r.group().free_rank()}, {"torsion", r.group().torsion()}}},
            {"elements", elems}};
  if (!r.labels().empty()) j["labels"] = r.labels();
  return j;
}

Json subset_json(Subset s) { return elements_of(s); }

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw InputError(Kind::InvalidValue, "expected a list of indices, got " + j.dump());
  Subset s = 0;
  for (const Json& i : j) {
    const std::size_t v = index_from_json(i);
    if (v >= kMaxGroundSize) throw InputError(Kind::InvalidValue, "index out of range: " + i.dump());
    s |= singleton(v);
  }
  return s;
}

void to_json(Json& j, const UniPoly& p) { j = {{"coeffs", p.coeffs()}}; }

void from_json(const Json& j, UniPoly& p) { p = UniPoly(need_as<std::vector<Integer>>(j, "coeffs")); }

void to_json(Json& j, const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c});
  j = {{"terms", terms}};
}

void from_json(const Json& j, BiPoly& p) {
  p = BiPoly();
  const Json& terms = need(j, "terms");
  if (!terms.is_array()) throw InputError(Kind::InvalidValue, "terms must be a list");
  for (const Json& t : terms) {
    if (!t.is_array() || t.size() != 3) throw InputError(Kind::InvalidValue, "bad term " + t.dump());
    p.add_term(static_cast<unsigned>(index_from_json(t[0])), static_cast<unsigned>(index_from_json(t[1])),
               integer_from(t[2]));
  }
}

void to_json(Json& j, const AxiomWitness& w) {
  j = {{"axiom", to_string(w.axiom)}, {"a", subset_json(w.a)}, {"b", subset_json(w.b)},
       {"f", subset_json(w.f)},       {"t", subset_json(w.t)}};
  j["element"] = w.element == kNoElement ? Json(nullptr) : Json(w.element);
}

void from_json(const Json& j, AxiomWitness& w) {
  w.axiom = axiom_from_string(need_as<std::string>(j, "axiom"));
  w.a = subset_from_json(need(j, "a"));
  w.b = subset_from_json(need(j, "b"));
  w.f = subset_from_json(need(j, "f"));
  w.t = subset_from_json(need(j, "t"));
  const Json& e = need(j, "element");
  w.element = e.is_null() ? kNoElement : index_from_json(e);
}

void to_json(Json& j, const AxiomStatus& s) {
  j = {{"axiom", to_string(s.axiom)},
       {"passed", s.passed},
       {"violations", s.violations},
       {"witnesses", s.witnesses}};
}

void from_json(const Json& j, AxiomStatus& s) {
  s.axiom = axiom_from_string(need_as<std::string>(j, "axiom"));
  s.passed = need_as<bool>(j, "passed");
  s.violations = need_as<std::size_t>(j, "violations");
  s.witnesses = need(j, "witnesses").get<std::vector<AxiomWitness>>();
}

void to_json(Json& j, const AxiomReport& r) {
  j = {{"all_passed", r.all_passed()}, {"axioms", r.statuses}};
}

void from_json(const Json& j, AxiomReport& r) {
  r.statuses = need(j, "axioms").get<std::vector<AxiomStatus>>();
}

void to_json(Json& j, const DualMismatch& d) {
  j = {{"subset", subset_json(d.subset)},
       {"expected_rank", d.expected_rank},
       {"actual_rank", d.actual_rank},
       {"expected_multiplicity", d.expected_multiplicity},
       {"actual_multiplicity", d.actual_multiplicity}};
}

void from_json(const Json& j, DualMismatch& d) {
  d.subset = subset_from_json(need(j, "subset"));
  d.expected_rank = need_as<int>(j, "expected_rank");
  d.actual_rank = need_as<int>(j, "actual_rank");
  d.expected_multiplicity = integer_from(need(j, "expected_multiplicity"));
  d.actual_multiplicity = integer_from(need(j, "actual_multiplicity"));
}

void to_json(Json& j, const DualIsoResult& r) { j = {{"ok", r.ok}, {"mismatches", r.mismatches}}; }

void from_json(const Json& j, DualIsoResult& r) {
  r.ok = need_as<bool>(j, "ok");
  r.mismatches = need(j, "mismatches").get<std::vector<DualMismatch>>();
}

void to_json(Json& j, const WeightedSublist& w) {
  j = {{"sublist", subset_json(w.sublist)}, {"weight", w.weight}};
}

void from_json(const Json& j, WeightedSublist& w) {
  w.sublist = subset_from_json(need(j, "sublist"));
  w.weight = integer_from(need(j, "weight"));
}

void to_json(Json& j, const PairClass& c) {
  j = {{"basis", subset_json(c.basis)}, {"active", subset_json(c.active)}, {"weight", c.weight}};
}

void from_json(const Json& j, PairClass& c) {
  c.basis = subset_from_json(need(j, "basis"));
  c.active = subset_from_json(need(j, "active"));
  c.weight = integer_from(need(j, "weight"));
}

void to_json(Json& j, const MatchEntry& e) {
  j = {{"primal", e.primal}, {"dual", e.dual}, {"count", e.count}};
}

void from_json(const Json& j, MatchEntry& e) {
  e.primal = index_from_json(need(j, "primal"));
  e.dual = index_from_json(need(j, "dual"));
  e.count = integer_from(need(j, "count"));
}

void to_json(Json& j, const Matching& m) {
  j = {{"basis", subset_json(m.basis)},
       {"primal", m.primal},
       {"dual", m.dual},
       {"entries", m.entries}};
}

void from_json(const Json& j, Matching& m) {
  m.basis = subset_from_json(need(j, "basis"));
  m.primal = need(j, "primal").get<std::vector<PairClass>>();
  m.dual = need(j, "dual").get<std::vector<PairClass>>();
  m.entries = need(j, "entries").get<std::vector<MatchEntry>>();
}

void to_json(Json& j, const TorusPoint& p) { j = p.values; }

void from_json(const Json& j, TorusPoint& p) {
  if (!j.is_array()) throw InputError(Kind::InvalidValue, "a point is a list of fractions");
  p.values = j.get<std::vector<Rational>>();
}

void to_json(Json& j, const PointRecord& r) {
  j = {{"point", r.point}, {"x_p", subset_json(r.x_p)}};
}

void from_json(const Json& j, PointRecord& r) {
  r.point = need(j, "point").get<TorusPoint>();
  r.x_p = subset_from_json(need(j, "x_p"));
}

void to_json(Json& j, const CountDiscrepancy& d) {
  j = {{"sublist", subset_json(d.sublist)}, {"points", d.points}, {"multiplicity", d.multiplicity}};
}

void from_json(const Json& j, CountDiscrepancy& d) {
  d.sublist = subset_from_json(need(j, "sublist"));
  d.points = need_as<std::size_t>(j, "points");
  d.multiplicity = integer_from(need(j, "multiplicity"));
}

void to_json(Json& j, const ComponentCountReport& r) {
  j = {{"ok", r.ok}, {"discrepancies", r.discrepancies}};
}

void from_json(const Json& j, ComponentCountReport& r) {
  r.ok = need_as<bool>(j, "ok");
  r.discrepancies = need(j, "discrepancies").get<std::vector<CountDiscrepancy>>();
}

void to_json(Json& j, const AesReport& r) {
  j = {{"ok", r.ok}, {"arithmetic", r.arithmetic}, {"local_sum", r.local_sum}};
}

void from_json(const Json& j, AesReport& r) {
  r.ok = need_as<bool>(j, "ok");
  r.arithmetic = need(j, "arithmetic").get<UniPoly>();
  r.local_sum = need(j, "local_sum").get<UniPoly>();
}

}  // namespace arithmat
