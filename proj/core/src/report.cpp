#include "relroot/report.hpp"

#include <algorithm>

#ifndef RELROOT_VERSION
#define RELROOT_VERSION "0.0.0"
#endif

namespace relroot {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "fail";
}

const char* tool_version() { return RELROOT_VERSION; }

nlohmann::json to_json(const VerificationCase& c) {
  return {{"id", c.id}, {"spec", c.spec}, {"params", c.params}, {"status", to_string(c.status)}, {"witness", c.witness}};
}

Summary SuiteReport::summary() const {
  Summary s;
  for (const auto& c : cases) {
    switch (c.status) {
      case CaseStatus::Pass: ++s.pass; break;
      case CaseStatus::Fail: ++s.fail; break;
      case CaseStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

nlohmann::json SuiteReport::to_json() const {
  std::vector<const VerificationCase*> sorted;
  for (const auto& c : cases) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });
  nlohmann::json arr = nlohmann::json::array();
  for (auto* c : sorted) arr.push_back(relroot::to_json(*c));
  Summary s = summary();
  return {{"suite", suite},
          {"toolVersion", tool_version},
          {"cases", arr},
          {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}},
          {"wallTime", wall_time}};
}

std::string SuiteReport::dump() const { return to_json().dump(2); }

}  // namespace relroot
