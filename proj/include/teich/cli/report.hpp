#pragma once

#include "teich/cli/config.hpp"
#include "teich/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teich::cli {

inline constexpr const char* kReportSchema = "teichcheck-report/1";

struct CheckRecord {
  std::string name;
  std::string anchor;  // stable traceability label
  bool pass = false;
  std::vector<std::pair<std::string, Rat>> witness;
  std::string note;

  CheckRecord& with(std::string key, Rat value) {
    witness.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::optional<long> wall_time_us;

  CheckRecord& add(std::string name, std::string anchor, bool pass, std::string note = {});
  bool passed() const;
};

/// Canonical JSON: fixed key order, rationals as "num/den", no floats.
std::string render_json(const std::string& command, const RunConfig& cfg, const std::vector<Report>& suites);
std::string render_csv(const std::vector<Report>& suites);
std::string render_text(const std::string& command, const RunConfig& cfg, const std::vector<Report>& suites);

std::string render(OutputFormat format, const std::string& command, const RunConfig& cfg,
                   const std::vector<Report>& suites);

}  // namespace teich::cli
