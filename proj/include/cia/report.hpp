#ifndef CIA_REPORT_HPP
#define CIA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace cia {

/// Structured pass/fail record for a verification target. Each check may
/// carry a witness (failing pair, remainder, point, face) as JSON.
struct VerificationReport {
  struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    nlohmann::json witness;
  };

  std::string target;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  explicit VerificationReport(std::string target_name = {}) : target(std::move(target_name)) {}

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  Check& add(std::string name, bool ok, std::string detail = {}, nlohmann::json witness = nullptr) {
    checks.push_back({std::move(name), ok, std::move(detail), std::move(witness)});
    return checks.back();
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Appends another report's checks, prefixing their names.
  void absorb(const VerificationReport& other, const std::string& prefix = {});

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace cia

#endif  // CIA_REPORT_HPP
