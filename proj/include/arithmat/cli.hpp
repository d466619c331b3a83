#pragma once

#include "arithmat/json_io.hpp"
#include "arithmat/tutte.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arithmat::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kMismatch = 2 };

struct TutteReport {
  std::string method;
  std::optional<BiPoly> subset_sum;
  std::optional<BiPoly> delcon;
  bool consistent = true;

  friend bool operator==(const TutteReport&, const TutteReport&) = default;
};

struct GaleDualReport {
  Representation dual;
  DualIsoResult check;

  friend bool operator==(const GaleDualReport&, const GaleDualReport&) = default;
};

struct ActivityReport {
  std::vector<std::size_t> order;
  ActivityLists lists;
  std::vector<Matching> matchings;
  BiPoly mbar;
  BiPoly tutte;
  bool consistent = true;

  friend bool operator==(const ActivityReport&, const ActivityReport&) = default;
};

struct PointsReport {
  std::vector<PointRecord> points;
  ComponentCountReport counts;
  AesReport aes;

  friend bool operator==(const PointsReport&, const PointsReport&) = default;
};

struct SpecializeReport {
  Specialization which = Specialization::BasesCount;
  SpecializationValue value;

  friend bool operator==(const SpecializeReport&, const SpecializeReport&) = default;
};

struct SequenceCheck {
  std::string name;
  UniPoly polynomial;
  bool holds = true;

  friend bool operator==(const SequenceCheck&, const SequenceCheck&) = default;
};

/// gcd and torsion-free answer directly; unimodal and log-concave are asked
/// of M(1-q,0) and M(1+q,1) and hold when both sequences have the property.
struct PropsReport {
  std::string check;
  bool holds = true;
  std::vector<SequenceCheck> sequences;

  friend bool operator==(const PropsReport&, const PropsReport&) = default;
};

void to_json(Json& j, const TutteReport& r);
void from_json(const Json& j, TutteReport& r);
void to_json(Json& j, const GaleDualReport& r);
void from_json(const Json& j, GaleDualReport& r);
void to_json(Json& j, const ActivityReport& r);
void from_json(const Json& j, ActivityReport& r);
void to_json(Json& j, const PointsReport& r);
void from_json(const Json& j, PointsReport& r);
void to_json(Json& j, const SpecializeReport& r);
void from_json(const Json& j, SpecializeReport& r);
void to_json(Json& j, const SequenceCheck& r);
void from_json(const Json& j, SequenceCheck& r);
void to_json(Json& j, const PropsReport& r);
void from_json(const Json& j, PropsReport& r);

/// Runs one command. `args` is argv-style (args[0] is the program name);
/// the matroid is read from the named file or from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arithmat::cli
