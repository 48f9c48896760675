#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hypertile {

struct CheckRecord {
  std::string id;
  std::string description;
  bool passed = false;
  std::vector<std::pair<std::string, double>> measured;
  std::vector<std::pair<std::string, double>> tolerances;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double runtime_ms = 0.0;

  bool passed() const;
};

/// heptagon, monotonicity, evengon, tileparams, flattening, hull,
/// combinatorics, klein-quartic, euclid-hex, reg-is-best.
const std::vector<std::string>& suite_names();

bool is_known_suite(const std::string& name);

/// Runs a named suite, or every suite in order for "all". Throws
/// DomainError for unknown names.
VerificationReport run_suite(const std::string& name, std::uint64_t seed);

/// Key order is fixed; the runtime field is omitted when
/// `include_runtime` is false.
std::string report_to_json(const VerificationReport& report,
                           bool include_runtime = true);

}  // namespace hypertile
