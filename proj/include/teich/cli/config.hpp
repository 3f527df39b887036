#pragma once

#include "teich/rational.hpp"
#include "teich/theta.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teich::cli {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat f);

/// Flat run configuration. Every rational is read from a "num/den" string;
/// JSON floats are rejected outright.
struct RunConfig {
  long p = 2;
  long ell = 5;
  std::pair<long, long> ell_sweep{3, 97};
  Rat v_q = 1;
  long theta_truncation = 6;
  long frobenius_depth = 2;
  std::optional<Rat> rho_weight = Rat(1);  // nullopt selects the |.|_1 norm
  int padic_precision = 12;
  OutputFormat output_format = OutputFormat::Json;
  SignConvention theta_sign = SignConvention::Signed;
  std::vector<Rat> epsilon_grid{make_rat(1, 2), make_rat(1, 3), make_rat(1, 10)};
  std::pair<long, long> chain_window{-3, 3};
  Rat corollary_c = make_rat(1, 2);
  long property_trials = 100;
  std::uint64_t seed = 1729;
};

/// Throws ConfigError on unknown keys, wrong types or violated invariants.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);
void validate(const RunConfig& cfg);

/// Config echo including the gauge conventions used by every report.
nlohmann::ordered_json config_echo(const RunConfig& cfg);

}  // namespace teich::cli
