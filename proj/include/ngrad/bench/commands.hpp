#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ngrad/bench/check_suite.hpp"
#include "ngrad/bench/sweep.hpp"

namespace ngrad::bench {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs every horizon of the experiment in `config_path`, writing
/// <trajectory_prefix>_T<T>.csv and <summary_prefix>_T<T>.json into `out_dir`.
int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
            std::ostream& log, std::ostream& err);

/// Writes the sweep table to `csv`. Exit 1 when any row breaks a bound.
int cmd_sweep(const SweepGrid& grid, std::ostream& csv, std::ostream& err);

/// Fits log gap against log T over the summary records in `inputs` (each file
/// holds one record or an array of them) and prints the fit as JSON.
int cmd_ratefit(const std::vector<std::filesystem::path>& inputs, std::ostream& out,
                std::ostream& err);

/// Runs the named suite (all suites when empty) and prints a JSON report.
int cmd_check(const std::optional<std::string>& suite, const CheckOptions& options,
              std::ostream& out, std::ostream& err);

}  // namespace ngrad::bench
