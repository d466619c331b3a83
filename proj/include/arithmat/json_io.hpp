#pragma once

#include "arithmat/activity.hpp"
#include "arithmat/arith_matroid.hpp"
#include "arithmat/polynomial.hpp"
#include "arithmat/representation.hpp"
#include "arithmat/toric_points.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

// Integers travel as decimal strings so that no precision is lost; plain JSON
// numbers are accepted on input.
template <>
struct nlohmann::adl_serializer<arithmat::Integer> {
  static void to_json(json& j, const arithmat::Integer& v) { j = v.str(); }
  static void from_json(const json& j, arithmat::Integer& v);
};

template <>
struct nlohmann::adl_serializer<arithmat::Rational> {
  static void to_json(json& j, const arithmat::Rational& v) { j = v.str(); }
  static void from_json(const json& j, arithmat::Rational& v);
};

namespace arithmat {

using Json = nlohmann::json;

/// Rejected matroid description. kind() separates the diagnostics.
class InputError : public std::runtime_error {
 public:
  enum class Kind { MalformedJson, MissingKey, InvalidValue };

  InputError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A parsed input. Representation inputs keep the representation alongside
/// the matroid it induces.
struct MatroidInput {
  ArithmeticMatroid matroid;
  std::optional<Representation> representation;
};

MatroidInput parse_input(std::string_view text);
MatroidInput input_from_json(const Json& j);

/// Input-schema renderings; both parse back with input_from_json.
Json explicit_json(const ArithmeticMatroid& m);
Json representation_json(const Representation& r);

Json subset_json(Subset s);
Subset subset_from_json(const Json& j);

void to_json(Json& j, const UniPoly& p);
void from_json(const Json& j, UniPoly& p);
void to_json(Json& j, const BiPoly& p);
void from_json(const Json& j, BiPoly& p);

void to_json(Json& j, const AxiomWitness& w);
void from_json(const Json& j, AxiomWitness& w);
void to_json(Json& j, const AxiomStatus& s);
void from_json(const Json& j, AxiomStatus& s);
void to_json(Json& j, const AxiomReport& r);
void from_json(const Json& j, AxiomReport& r);

void to_json(Json& j, const DualMismatch& d);
void from_json(const Json& j, DualMismatch& d);
void to_json(Json& j, const DualIsoResult& r);
void from_json(const Json& j, DualIsoResult& r);

void to_json(Json& j, const WeightedSublist& w);
void from_json(const Json& j, WeightedSublist& w);
void to_json(Json& j, const PairClass& c);
void from_json(const Json& j, PairClass& c);
void to_json(Json& j, const MatchEntry& e);
void from_json(const Json& j, MatchEntry& e);
void to_json(Json& j, const Matching& m);
void from_json(const Json& j, Matching& m);

void to_json(Json& j, const TorusPoint& p);
void from_json(const Json& j, TorusPoint& p);
void to_json(Json& j, const PointRecord& r);
void from_json(const Json& j, PointRecord& r);
void to_json(Json& j, const CountDiscrepancy& d);
void from_json(const Json& j, CountDiscrepancy& d);
void to_json(Json& j, const ComponentCountReport& r);
void from_json(const Json& j, ComponentCountReport& r);
void to_json(Json& j, const AesReport& r);
void from_json(const Json& j, AesReport& r);

}  // namespace arithmat
