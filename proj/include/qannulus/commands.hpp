#pragma once

#include <filesystem>
#include <ostream>

#include <json.hpp>

#include "qannulus/config.hpp"

namespace qannulus {

struct CommandResult {
    int exit_code = 0;
    nlohmann::json summary;
};

/// Runs the property suite; writes checks.csv, flagged.csv and summary.json
/// into out. Exit 0 iff there are no unflagged failures.
CommandResult cmd_verify(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// HS decay table decay.csv plus the trend verdict.
CommandResult cmd_decay(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// Singular values and block-Dirac spectra of the truncated operator on each
/// configured window, plus stabilization deltas.
CommandResult cmd_spectrum(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// Kernel dump kernels.csv with columns n,l,j,sign,log_magnitude.
CommandResult cmd_kernels(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

}  // namespace qannulus
