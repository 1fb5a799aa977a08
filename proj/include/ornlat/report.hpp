#pragma once

#include <string>
#include <vector>

namespace ornlat {

struct CheckRecord {
  std::string name;
  std::string instance;
  bool passed = true;
  std::string witness;  // non-empty on failure
  double wall_ms = 0;   // stderr summary only, never part of the canonical JSON
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const;
  void add(CheckRecord record);
  void merge(const VerificationReport& other);

  // Canonical machine-readable form; deterministic for identical inputs.
  std::string to_json() const;
  // Human-readable lines with timings.
  std::string summary() const;
};

}  // namespace ornlat
