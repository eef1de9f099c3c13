#pragma once

#include <string>

#include "alphashear/run_config.hpp"

namespace alphashear {

// Executes one CLI subcommand ("transform", "bounds", "certify", "scan",
// "render") and returns the process exit code: 0 for success / certified,
// 1 when a criterion is not certified or a collision is confirmed,
// 2 for configuration errors, 3 for numeric failures.
int run_command(const std::string& command, const RunConfig& cfg);

}  // namespace alphashear
