#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitkit {

/// Result of one named check. Caveat flags mark verdicts that were decided
/// at the Lie-algebra level only ("connectedness-assumed") or by seeded
/// numeric sampling ("sampled-only").
struct CheckRecord {
  std::string name;
  std::string verdict;  // "holds" | "fails" | "not-evaluated"
  std::optional<double> residual;
  std::string source;
  std::vector<std::string> caveats;
};

/// Deterministic, schema-versioned run report. Checks are kept sorted by
/// name; identical inputs with identical seed/tolerance/sample settings
/// produce byte-identical JSON.
struct Report {
  std::string command;
  std::string input;
  std::string digest;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int samples = 100;
  std::map<std::string, std::string> fields;  // scalar result fields
  std::vector<CheckRecord> checks;

  void add(CheckRecord rec);
  void add_bool(const std::string& name, bool holds, const std::string& source,
                std::vector<std::string> caveats = {});
  void add_field(const std::string& name, const std::string& value);
  bool all_hold() const;

  std::string to_json() const;
  std::string to_text() const;
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace orbitkit
