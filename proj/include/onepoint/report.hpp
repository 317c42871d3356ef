#pragma once

// The analysis report of a pencil and its JSON form (schema 1).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "onepoint/pencil.hpp"

namespace onepoint {

inline constexpr int kReportSchema = 1;

struct SingularityRecord {
  std::string point;
  std::string kind;
  bool operator==(const SingularityRecord&) const = default;
};

struct MemberRecord {
  std::string param;
  std::string form;
  int disc_multiplicity = 0;
  std::vector<SingularityRecord> singularities;
  bool irreducible = true;
  bool irreducible_certified = false;
  bool operator==(const MemberRecord&) const = default;
};

struct ComponentRecord {
  std::string label;
  int multiplicity = 1;
  int self_intersection = 0;
  int genus = 0;
  std::optional<std::string> singularity;
  bool operator==(const ComponentRecord&) const = default;
};

struct FiberRecord {
  std::string param;
  std::string kodaira;
  std::vector<ComponentRecord> components;
  std::vector<std::vector<int>> adjacency;
  bool operator==(const FiberRecord&) const = default;
};

struct FibrationRecord {
  std::vector<FiberRecord> fibers;
  std::vector<std::string> kodaira_types;  // resolved fibers first, then inferred I1
  int euler_sum = 0;
  int mw_rank = 0;
  bool extremal = false;
  std::string mp_label;
  std::optional<std::string> beauville_row;
  bool operator==(const FibrationRecord&) const = default;
};

struct Report {
  int schema = kReportSchema;
  std::string field;
  std::vector<std::string> pencil;  // the two generators
  std::string classification;
  std::optional<std::string> base_point;
  std::optional<std::string> flex_line;
  std::string discriminant;  // B(1, t) together with its degree
  std::vector<int> profile;
  bool profile_complete = false;
  std::vector<MemberRecord> singular_members;
  std::optional<bool> isotrivial;
  std::optional<FibrationRecord> fibration;
  std::vector<std::string> warnings;
  bool operator==(const Report&) const = default;
};

// Classification, discriminant, singular members, isotriviality and, for a
// single 9-fold base point, the fibration. GenericSingular pencils raise
// PreconditionFailed.
Report analyze_pencil(const Pencil& P);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);  // ParseError on schema mismatch
std::string format_report(const Report& r);

}  // namespace onepoint
