#include "cia/report.hpp"

namespace cia {

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail, c.witness});
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "cia/1";
  j["target"] = target;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.witness.is_null()) cj["witness"] = c.witness;
    j["checks"].push_back(std::move(cj));
  }
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string VerificationReport::to_text() const {
  std::string s = target + ": " + (passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : checks) {
    s += std::string("  [") + (c.passed ? "ok" : "FAIL") + "] " + c.name;
    if (!c.detail.empty()) s += " - " + c.detail;
    s += "\n";
    if (!c.passed && !c.witness.is_null()) s += "      witness: " + c.witness.dump() + "\n";
  }
  for (const auto& n : notes) s += "  note: " + n + "\n";
  return s;
}

}  // namespace cia
