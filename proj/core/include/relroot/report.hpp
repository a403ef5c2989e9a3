#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace relroot {

enum class CaseStatus { Pass, Fail, Skipped };
const char* to_string(CaseStatus s);

struct VerificationCase {
  std::string id;
  /// Folding or type the case runs on, in FoldingSpec text form.
  std::string spec;
  nlohmann::json params = nlohmann::json::object();
  CaseStatus status = CaseStatus::Fail;
  nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const VerificationCase& c);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

struct SuiteReport {
  std::string suite;
  std::string tool_version;
  std::vector<VerificationCase> cases;
  double wall_time = 0;

  Summary summary() const;
  /// Keys in sorted order; cases sorted by id.
  nlohmann::json to_json() const;
  /// Two-space indented canonical text.
  std::string dump() const;
};

/// Library version string.
const char* tool_version();

}  // namespace relroot
