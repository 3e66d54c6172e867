#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/rational.hpp"

namespace reeb {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  unsigned trials = 0;  // 0 picks the experiment's default
  Rational K{1, 22};
  Rational epsilon_fraction{1, 2};
  unsigned min_critical = 3;
  unsigned max_critical = 7;
  Rational lo = 0;
  Rational hi = 10;
  unsigned max_extra_edges = 2;
};

/// Throws InvalidArgument for K outside (0, 1/22], a fraction outside (0, 1) or
/// bad size bounds.
void check_config(const ExperimentConfig& config);

struct TrialRecord {
  std::size_t index = 0;
  bool pass = false;
  nlohmann::ordered_json data;
};

struct ExperimentReport {
  std::string name;
  std::vector<TrialRecord> trials;
  std::size_t passed = 0;
  nlohmann::ordered_json summary;
  bool ok() const { return passed == trials.size(); }
};

const std::vector<std::string>& experiment_names();

/// Runs a named experiment. Throws InvalidArgument for unknown names.
/// Deterministic in (name, config).
ExperimentReport run_experiment(std::string_view name, const ExperimentConfig& config);

/// One line per trial and a summary line.
std::string format_report_text(const ExperimentReport& r);
/// One JSON object per line: a record per trial, then a summary record.
std::string format_report_records(const ExperimentReport& r);

}  // namespace reeb
