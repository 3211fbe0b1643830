#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/report.hpp"

namespace fuzznorm {

// Runs one subcommand against the configuration and returns its record
// stream plus plot data. Theorem-hypothesis violations become
// precondition-unmet records, never failures. Identical config and seed
// give byte-identical records.
RunResult run_subcommand(const std::string& name, const RunConfig& cfg);

const std::vector<std::string>& subcommand_names();

}  // namespace fuzznorm
