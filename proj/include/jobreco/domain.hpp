#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jobreco {

// The six scored attributes. All other profile data is carried but not
// scored deterministically.
inline const std::vector<std::string>& attribute_names() {
  static const std::vector<std::string> names = {
      "skills", "timezone", "certifications", "education", "experience", "role"};
  return names;
}

enum class Direction { kCloser, kExact, kHigher, kLower };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

enum class SourceMethod { kDeterministic, kGuided, kUnguided, kHybrid };

std::string to_string(SourceMethod m);
SourceMethod source_method_from_string(const std::string& s);

/// Lowercases, strips leading/trailing whitespace, collapses internal
/// whitespace runs to a single space. Idempotent.
std::string canonicalize(const std::string& s);

struct SkillLevel {
  std::string skill_name;  // canonical lowercase
  int proficiency = 0;     // 0..5

  friend bool operator==(const SkillLevel&, const SkillLevel&) = default;
};

struct TalentProfile {
  std::string talent_id;
  std::vector<std::string> role_preferences;  // index 0 = 1st preference
  std::vector<SkillLevel> skills;             // unique canonical names
  std::set<std::string> certifications;       // canonical
  int education_level = 1;                    // 1..5
  std::map<std::string, double> experience_by_role;  // role -> years
  double timezone_offset_hours = 0.0;         // [-12, +14]
  std::optional<std::string> preferred_location;
  std::string raw_text;

  /// Proficiency for a canonical skill name, or nullopt when not held.
  std::optional<int> proficiency_of(const std::string& canonical_skill) const;

  friend bool operator==(const TalentProfile&, const TalentProfile&) = default;
};

struct JobRequirement {
  std::string job_id;
  std::string organization;
  std::string required_role;
  std::vector<SkillLevel> required_skills;
  std::set<std::string> required_certifications;
  int required_education_level = 1;
  double required_experience_years = 0.0;
  double timezone_offset_hours = 0.0;
  std::optional<std::string> location;
  std::string raw_text;

  friend bool operator==(const JobRequirement&, const JobRequirement&) = default;
};

struct MatchConfig {
  std::map<std::string, Direction> directions;
  std::map<std::string, double> weights;
  int top_n = 3;

  /// Paper configuration: every attribute "closer" except certifications
  /// ("exact") and experience ("higher"); unit weights.
  static MatchConfig defaults();

  Direction direction_of(const std::string& attribute) const;
  double weight_of(const std::string& attribute) const;
};

struct Recommendation {
  std::string job_id;
  int rank = 0;  // 1 = best
  std::optional<double> score;  // [0,1]; absent in unguided mode
  std::vector<std::string> benefits;
  std::vector<std::string> drawbacks;
  std::vector<std::string> qualitative_notes;
  std::optional<double> org_rating;   // [1,10]
  std::optional<double> role_rating;  // [1,10]
  SourceMethod source_method = SourceMethod::kDeterministic;

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

// Result-set wrapper so operations can report non-fatal warnings (clamps,
// partial results) next to the recommendations themselves.
struct RecommendationSet {
  std::vector<Recommendation> recommendations;
  std::vector<std::string> warnings;
};

/// Empty list iff every TalentProfile invariant holds. Violations are data,
/// not failures; each names the field and rule.
std::vector<std::string> validate_profile(const TalentProfile& p);
std::vector<std::string> validate_job(const JobRequirement& j);
std::vector<std::string> validate_config(const MatchConfig& c);
std::vector<std::string> validate_recommendation_set(const std::vector<Recommendation>& recs);

// Strict JSON (de)serialization for the file formats. Field names are the
// snake_case type fields; unknown fields are rejected with a DataError
// naming the field.
nlohmann::json to_json(const SkillLevel& s);
nlohmann::json to_json(const TalentProfile& p);
nlohmann::json to_json(const JobRequirement& j);
nlohmann::json to_json(const MatchConfig& c);
nlohmann::json to_json(const Recommendation& r);

SkillLevel skill_level_from_json(const nlohmann::json& j);
TalentProfile talent_profile_from_json(const nlohmann::json& j);
JobRequirement job_requirement_from_json(const nlohmann::json& j);
MatchConfig match_config_from_json(const nlohmann::json& j);
Recommendation recommendation_from_json(const nlohmann::json& j);

/// Throws DataError naming the first field of `j` not present in `allowed`.
void reject_unknown_fields(const nlohmann::json& j,
                           const std::vector<std::string>& allowed,
                           const std::string& type_name);

}  // namespace jobreco
