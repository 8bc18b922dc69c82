#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sortnet {

// Measurements for one value of n. Summary statistics are derived from raw.
struct PerNResult {
  int n = 0;
  std::vector<double> raw;
  std::map<std::string, double> extras;

  [[nodiscard]] double mean() const;
  [[nodiscard]] double sd() const;  // sample standard deviation (n-1)
  [[nodiscard]] double min() const;
  [[nodiscard]] double max() const;

  friend bool operator==(const PerNResult&, const PerNResult&) = default;
};

struct ExperimentReport {
  std::string experiment;
  std::string version = SORTNET_VERSION;
  nlohmann::json params = nlohmann::json::object();
  std::vector<PerNResult> per_n;
  // Excluded from serialization unless requested, so reports stay a pure
  // function of (parameters, seed, version).
  std::optional<double> wall_clock_seconds;

  [[nodiscard]] const PerNResult& at(int n) const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

nlohmann::json report_to_json(const ExperimentReport& report,
                              bool include_timing = false);
ExperimentReport report_from_json(const nlohmann::json& j);

// Long format, one record per line: kind,n,key,index,value. Meta and param
// rows carry JSON-encoded values; doubles use round-trip precision.
std::string report_to_csv(const ExperimentReport& report,
                          bool include_timing = false);
ExperimentReport report_from_csv(const std::string& text);

}  // namespace sortnet
