#pragma once

#include <string>

#include "ihg_cli/config.hpp"

namespace ihg::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInvalidInput = 2, kNumericalBreakdown = 3 };

struct RunResult {
    int exitCode = kPass;
    Json report;      // structured report, also for failures ({"error": ...})
    std::string text; // rendered output in the requested format
};

/// Executes one job. Never throws: invalid input gives exit 2, pole and branch
/// errors exit 3, a failed check exits 1.
RunResult run(const JobConfig &cfg);

/// One row per grid point: parameters, F, Phi, relative gap, residual norm, error.
Json sweepRows(const JobConfig &cfg);
std::string sweepCsv(const Json &rows, int n);

/// Flattens a JSON report to "path,value" lines.
std::string flattenCsv(const Json &report);

} // namespace ihg::cli
