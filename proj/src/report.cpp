#include "ornlat/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace ornlat {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::add(CheckRecord record) { checks.push_back(std::move(record)); }

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["instance"] = c.instance;
    e["verdict"] = c.passed ? "pass" : "fail";
    e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  return j.dump(2);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.instance.empty()) os << " [" << c.instance << "]";
    os << " (" << c.wall_ms << " ms)";
    if (!c.witness.empty()) os << "  -- " << c.witness;
    os << "\n";
  }
  os << (passed() ? "PASSED" : "FAILED") << " " << suite << " (" << checks.size()
     << " checks)\n";
  return os.str();
}

}  // namespace ornlat
