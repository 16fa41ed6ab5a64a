#include "jobreco/domain.hpp"

#include "jobreco/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace jobreco {

namespace {

using nlohmann::json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

const json& require_field(const json& j, const char* field, const std::string& type_name) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw DataError("missing field '" + std::string(field) + "' in " + type_name);
  }
  return *it;
}

double get_number(const json& j, const char* field, const std::string& type_name) {
  const json& v = require_field(j, field, type_name);
  if (!v.is_number()) {
    throw DataError("field '" + std::string(field) + "' in " + type_name + " must be a number");
  }
  return v.get<double>();
}

int get_int(const json& j, const char* field, const std::string& type_name) {
  const json& v = require_field(j, field, type_name);
  if (!v.is_number_integer()) {
    throw DataError("field '" + std::string(field) + "' in " + type_name + " must be an integer");
  }
  return v.get<int>();
}

std::string get_string(const json& j, const char* field, const std::string& type_name) {
  const json& v = require_field(j, field, type_name);
  if (!v.is_string()) {
    throw DataError("field '" + std::string(field) + "' in " + type_name + " must be a string");
  }
  return v.get<std::string>();
}

std::vector<std::string> get_string_array(const json& j, const char* field,
                                          const std::string& type_name) {
  const json& v = require_field(j, field, type_name);
  if (!v.is_array()) {
    throw DataError("field '" + std::string(field) + "' in " + type_name + " must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw DataError("field '" + std::string(field) + "' in " + type_name +
                      " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<SkillLevel> get_skills(const json& j, const char* field,
                                   const std::string& type_name) {
  const json& v = require_field(j, field, type_name);
  if (!v.is_array()) {
    throw DataError("field '" + std::string(field) + "' in " + type_name + " must be an array");
  }
  std::vector<SkillLevel> out;
  for (const auto& item : v) {
    out.push_back(skill_level_from_json(item));
  }
  return out;
}

json skills_to_json(const std::vector<SkillLevel>& skills) {
  json arr = json::array();
  for (const auto& s : skills) arr.push_back(to_json(s));
  return arr;
}

bool is_known_attribute(const std::string& name) {
  const auto& names = attribute_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::kCloser: return "closer";
    case Direction::kExact: return "exact";
    case Direction::kHigher: return "higher";
    case Direction::kLower: return "lower";
  }
  return "closer";
}

Direction direction_from_string(const std::string& s) {
  if (s == "closer") return Direction::kCloser;
  if (s == "exact") return Direction::kExact;
  if (s == "higher") return Direction::kHigher;
  if (s == "lower") return Direction::kLower;
  throw DataError("unknown objective direction '" + s +
                  "' (expected closer, exact, higher, or lower)");
}

std::string to_string(SourceMethod m) {
  switch (m) {
    case SourceMethod::kDeterministic: return "deterministic";
    case SourceMethod::kGuided: return "guided";
    case SourceMethod::kUnguided: return "unguided";
    case SourceMethod::kHybrid: return "hybrid";
  }
  return "deterministic";
}

SourceMethod source_method_from_string(const std::string& s) {
  if (s == "deterministic") return SourceMethod::kDeterministic;
  if (s == "guided") return SourceMethod::kGuided;
  if (s == "unguided") return SourceMethod::kUnguided;
  if (s == "hybrid") return SourceMethod::kHybrid;
  throw DataError("unknown source_method '" + s + "'");
}

std::string canonicalize(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::optional<int> TalentProfile::proficiency_of(const std::string& canonical_skill) const {
  for (const auto& s : skills) {
    if (s.skill_name == canonical_skill) return s.proficiency;
  }
  return std::nullopt;
}

MatchConfig MatchConfig::defaults() {
  MatchConfig c;
  for (const auto& name : attribute_names()) {
    c.directions[name] = Direction::kCloser;
    c.weights[name] = 1.0;
  }
  c.directions["certifications"] = Direction::kExact;
  c.directions["experience"] = Direction::kHigher;
  c.top_n = 3;
  return c;
}

Direction MatchConfig::direction_of(const std::string& attribute) const {
  auto it = directions.find(attribute);
  if (it != directions.end()) return it->second;
  if (attribute == "certifications") return Direction::kExact;
  if (attribute == "experience") return Direction::kHigher;
  return Direction::kCloser;
}

double MatchConfig::weight_of(const std::string& attribute) const {
  auto it = weights.find(attribute);
  return it == weights.end() ? 1.0 : it->second;
}

std::vector<std::string> validate_profile(const TalentProfile& p) {
  std::vector<std::string> violations;
  if (p.role_preferences.empty()) {
    violations.push_back("role_preferences: must be non-empty");
  }
  std::set<std::string> seen_roles;
  for (const auto& role : p.role_preferences) {
    if (!seen_roles.insert(canonicalize(role)).second) {
      violations.push_back("role_preferences: duplicate role '" + role + "'");
    }
  }
  std::set<std::string> seen_skills;
  for (const auto& s : p.skills) {
    if (s.proficiency < 0 || s.proficiency > 5) {
      violations.push_back("skills: proficiency of '" + s.skill_name +
                           "' must be in [0, 5], got " + std::to_string(s.proficiency));
    }
    if (canonicalize(s.skill_name).empty()) {
      violations.push_back("skills: skill_name must be non-empty after canonicalization");
    } else if (!seen_skills.insert(canonicalize(s.skill_name)).second) {
      violations.push_back("skills: duplicate skill_name '" + s.skill_name + "'");
    }
  }
  if (p.education_level < 1 || p.education_level > 5) {
    violations.push_back("education_level: must be in [1, 5], got " +
                         std::to_string(p.education_level));
  }
  for (const auto& [role, years] : p.experience_by_role) {
    if (years < 0.0) {
      violations.push_back("experience_by_role: years for '" + role + "' must be >= 0");
    }
  }
  if (p.timezone_offset_hours < -12.0 || p.timezone_offset_hours > 14.0) {
    violations.push_back("timezone_offset_hours: must be in [-12, +14]");
  }
  return violations;
}

std::vector<std::string> validate_job(const JobRequirement& j) {
  std::vector<std::string> violations;
  if (j.job_id.empty()) {
    violations.push_back("job_id: must be non-empty");
  }
  if (j.required_education_level < 1 || j.required_education_level > 5) {
    violations.push_back("required_education_level: must be in [1, 5], got " +
                         std::to_string(j.required_education_level));
  }
  if (j.required_experience_years < 0.0) {
    violations.push_back("required_experience_years: must be >= 0");
  }
  if (j.timezone_offset_hours < -12.0 || j.timezone_offset_hours > 14.0) {
    violations.push_back("timezone_offset_hours: must be in [-12, +14]");
  }
  std::set<std::string> seen_skills;
  for (const auto& s : j.required_skills) {
    if (s.proficiency < 0 || s.proficiency > 5) {
      violations.push_back("required_skills: proficiency of '" + s.skill_name +
                           "' must be in [0, 5], got " + std::to_string(s.proficiency));
    }
    if (canonicalize(s.skill_name).empty()) {
      violations.push_back("required_skills: skill_name must be non-empty after canonicalization");
    } else if (!seen_skills.insert(canonicalize(s.skill_name)).second) {
      violations.push_back("required_skills: duplicate skill_name '" + s.skill_name + "'");
    }
  }
  return violations;
}

std::vector<std::string> validate_config(const MatchConfig& c) {
  std::vector<std::string> violations;
  for (const auto& [name, _] : c.directions) {
    if (!is_known_attribute(name)) {
      violations.push_back("directions: unknown attribute '" + name + "'");
    }
  }
  bool any_positive = false;
  for (const auto& [name, w] : c.weights) {
    if (!is_known_attribute(name)) {
      violations.push_back("weights: unknown attribute '" + name + "'");
    }
    if (w < 0.0) {
      violations.push_back("weights: weight of '" + name + "' must be >= 0");
    }
    if (w > 0.0) any_positive = true;
  }
  if (c.weights.empty()) any_positive = true;  // defaults are 1.0 each
  if (!any_positive) {
    violations.push_back("weights: at least one weight must be > 0");
  }
  if (c.top_n < 1) {
    violations.push_back("top_n: must be >= 1, got " + std::to_string(c.top_n));
  }
  return violations;
}

std::vector<std::string> validate_recommendation_set(const std::vector<Recommendation>& recs) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.rank != static_cast<int>(i) + 1) {
      violations.push_back("rank: expected consecutive ranks from 1, got " +
                           std::to_string(r.rank) + " at position " + std::to_string(i + 1));
    }
    if (r.score && (*r.score < 0.0 || *r.score > 1.0)) {
      violations.push_back("score: '" + r.job_id + "' outside [0, 1]");
    }
    if (r.org_rating && (*r.org_rating < 1.0 || *r.org_rating > 10.0)) {
      violations.push_back("org_rating: '" + r.job_id + "' outside [1, 10]");
    }
    if (r.role_rating && (*r.role_rating < 1.0 || *r.role_rating > 10.0)) {
      violations.push_back("role_rating: '" + r.job_id + "' outside [1, 10]");
    }
  }
  return violations;
}

void reject_unknown_fields(const json& j, const std::vector<std::string>& allowed,
                           const std::string& type_name) {
  if (!j.is_object()) {
    throw DataError(type_name + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw DataError("unknown field '" + item.key() + "' in " + type_name);
    }
  }
}

json to_json(const SkillLevel& s) {
  return json{{"skill_name", s.skill_name}, {"proficiency", s.proficiency}};
}

json to_json(const TalentProfile& p) {
  json j;
  j["talent_id"] = p.talent_id;
  j["role_preferences"] = p.role_preferences;
  j["skills"] = skills_to_json(p.skills);
  j["certifications"] = p.certifications;
  j["education_level"] = p.education_level;
  j["experience_by_role"] = p.experience_by_role;
  j["timezone_offset_hours"] = p.timezone_offset_hours;
  if (p.preferred_location) {
    j["preferred_location"] = *p.preferred_location;
  } else {
    j["preferred_location"] = nullptr;
  }
  j["raw_text"] = p.raw_text;
  return j;
}

json to_json(const JobRequirement& r) {
  json j;
  j["job_id"] = r.job_id;
  j["organization"] = r.organization;
  j["required_role"] = r.required_role;
  j["required_skills"] = skills_to_json(r.required_skills);
  j["required_certifications"] = r.required_certifications;
  j["required_education_level"] = r.required_education_level;
  j["required_experience_years"] = r.required_experience_years;
  j["timezone_offset_hours"] = r.timezone_offset_hours;
  if (r.location) {
    j["location"] = *r.location;
  } else {
    j["location"] = nullptr;
  }
  j["raw_text"] = r.raw_text;
  return j;
}

json to_json(const MatchConfig& c) {
  json dirs = json::object();
  for (const auto& [name, d] : c.directions) dirs[name] = to_string(d);
  json weights = json::object();
  for (const auto& [name, w] : c.weights) weights[name] = w;
  return json{{"directions", dirs}, {"weights", weights}, {"top_n", c.top_n}};
}

json to_json(const Recommendation& r) {
  json j;
  j["job_id"] = r.job_id;
  j["rank"] = r.rank;
  if (r.score) j["score"] = *r.score;
  j["benefits"] = r.benefits;
  j["drawbacks"] = r.drawbacks;
  j["qualitative_notes"] = r.qualitative_notes;
  if (r.org_rating) j["org_rating"] = *r.org_rating;
  if (r.role_rating) j["role_rating"] = *r.role_rating;
  j["source_method"] = to_string(r.source_method);
  return j;
}

SkillLevel skill_level_from_json(const json& j) {
  reject_unknown_fields(j, {"skill_name", "proficiency"}, "SkillLevel");
  SkillLevel s;
  s.skill_name = get_string(j, "skill_name", "SkillLevel");
  s.proficiency = get_int(j, "proficiency", "SkillLevel");
  return s;
}

TalentProfile talent_profile_from_json(const json& j) {
  reject_unknown_fields(j,
                        {"talent_id", "role_preferences", "skills", "certifications",
                         "education_level", "experience_by_role", "timezone_offset_hours",
                         "preferred_location", "raw_text"},
                        "TalentProfile");
  TalentProfile p;
  p.talent_id = get_string(j, "talent_id", "TalentProfile");
  p.role_preferences = get_string_array(j, "role_preferences", "TalentProfile");
  p.skills = get_skills(j, "skills", "TalentProfile");
  for (const auto& c : get_string_array(j, "certifications", "TalentProfile")) {
    p.certifications.insert(c);
  }
  p.education_level = get_int(j, "education_level", "TalentProfile");
  const json& exp = require_field(j, "experience_by_role", "TalentProfile");
  if (!exp.is_object()) {
    throw DataError("field 'experience_by_role' in TalentProfile must be an object");
  }
  for (const auto& item : exp.items()) {
    if (!item.value().is_number()) {
      throw DataError("experience_by_role values in TalentProfile must be numbers");
    }
    p.experience_by_role[item.key()] = item.value().get<double>();
  }
  p.timezone_offset_hours = get_number(j, "timezone_offset_hours", "TalentProfile");
  if (j.contains("preferred_location") && !j.at("preferred_location").is_null()) {
    p.preferred_location = get_string(j, "preferred_location", "TalentProfile");
  }
  p.raw_text = j.contains("raw_text") ? get_string(j, "raw_text", "TalentProfile") : "";
  return p;
}

JobRequirement job_requirement_from_json(const json& j) {
  reject_unknown_fields(j,
                        {"job_id", "organization", "required_role", "required_skills",
                         "required_certifications", "required_education_level",
                         "required_experience_years", "timezone_offset_hours", "location",
                         "raw_text"},
                        "JobRequirement");
  JobRequirement r;
  r.job_id = get_string(j, "job_id", "JobRequirement");
  r.organization = get_string(j, "organization", "JobRequirement");
  r.required_role = get_string(j, "required_role", "JobRequirement");
  r.required_skills = get_skills(j, "required_skills", "JobRequirement");
  for (const auto& c : get_string_array(j, "required_certifications", "JobRequirement")) {
    r.required_certifications.insert(c);
  }
  r.required_education_level = get_int(j, "required_education_level", "JobRequirement");
  r.required_experience_years = get_number(j, "required_experience_years", "JobRequirement");
  r.timezone_offset_hours = get_number(j, "timezone_offset_hours", "JobRequirement");
  if (j.contains("location") && !j.at("location").is_null()) {
    r.location = get_string(j, "location", "JobRequirement");
  }
  r.raw_text = j.contains("raw_text") ? get_string(j, "raw_text", "JobRequirement") : "";
  return r;
}

MatchConfig match_config_from_json(const json& j) {
  reject_unknown_fields(j, {"directions", "weights", "top_n"}, "MatchConfig");
  MatchConfig c = MatchConfig::defaults();
  if (j.contains("directions")) {
    const json& dirs = j.at("directions");
    if (!dirs.is_object()) throw DataError("'directions' in MatchConfig must be an object");
    for (const auto& item : dirs.items()) {
      if (!is_known_attribute(item.key())) {
        throw DataError("unknown attribute '" + item.key() + "' in MatchConfig directions");
      }
      c.directions[item.key()] = direction_from_string(item.value().get<std::string>());
    }
  }
  if (j.contains("weights")) {
    const json& weights = j.at("weights");
    if (!weights.is_object()) throw DataError("'weights' in MatchConfig must be an object");
    for (const auto& item : weights.items()) {
      if (!is_known_attribute(item.key())) {
        throw DataError("unknown attribute '" + item.key() + "' in MatchConfig weights");
      }
      if (!item.value().is_number()) {
        throw DataError("weight of '" + item.key() + "' in MatchConfig must be a number");
      }
      c.weights[item.key()] = item.value().get<double>();
    }
  }
  if (j.contains("top_n")) {
    c.top_n = get_int(j, "top_n", "MatchConfig");
  }
  auto violations = validate_config(c);
  if (!violations.empty()) {
    throw DataError("invalid MatchConfig: " + violations.front());
  }
  return c;
}

Recommendation recommendation_from_json(const json& j) {
  reject_unknown_fields(j,
                        {"job_id", "rank", "score", "benefits", "drawbacks",
                         "qualitative_notes", "org_rating", "role_rating", "source_method"},
                        "Recommendation");
  Recommendation r;
  r.job_id = get_string(j, "job_id", "Recommendation");
  r.rank = get_int(j, "rank", "Recommendation");
  if (j.contains("score") && !j.at("score").is_null()) {
    r.score = get_number(j, "score", "Recommendation");
  }
  if (j.contains("benefits")) r.benefits = get_string_array(j, "benefits", "Recommendation");
  if (j.contains("drawbacks")) r.drawbacks = get_string_array(j, "drawbacks", "Recommendation");
  if (j.contains("qualitative_notes")) {
    r.qualitative_notes = get_string_array(j, "qualitative_notes", "Recommendation");
  }
  if (j.contains("org_rating") && !j.at("org_rating").is_null()) {
    r.org_rating = get_number(j, "org_rating", "Recommendation");
  }
  if (j.contains("role_rating") && !j.at("role_rating").is_null()) {
    r.role_rating = get_number(j, "role_rating", "Recommendation");
  }
  r.source_method = source_method_from_string(get_string(j, "source_method", "Recommendation"));
  return r;
}

}  // namespace jobreco
