#pragma once

#include "teich/cli/config.hpp"
#include "teich/cli/report.hpp"

#include <string_view>
#include <vector>

namespace teich::cli {

Report run_verify_theta(const RunConfig& cfg);
Report run_bound(const RunConfig& cfg);
Report run_sweep_ell(const RunConfig& cfg);
Report run_ansatz(const RunConfig& cfg);
Report run_loglink(const RunConfig& cfg);

/// Dispatches a subcommand name ("verify-theta", "bound", "ansatz", "loglink",
/// "sweep-ell", "all"). Domain, window and precision errors propagate.
std::vector<Report> run_command(std::string_view command, const RunConfig& cfg, bool timing = false);

/// 0 when every check passes, 1 otherwise.
int exit_code(const std::vector<Report>& suites);

}  // namespace teich::cli
