// SPDX-License-Identifier: Apache-2.0

#ifndef IRS_CLI_COMMANDS_HPP
#define IRS_CLI_COMMANDS_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include "cli/run_spec.hpp"
#include "irs/geometry.hpp"

namespace irs::cli {

/// Scenario selected by the run spec (preset or config file) with command-line overrides
/// applied. Overrides are reported on `log` when given.
ScenarioConfig effective_scenario(const RunSpec& spec, std::ostream* log = nullptr);

struct RunContext {
    std::ostream* out = nullptr;  ///< summary lines (written files, medians)
    std::ostream* diag = nullptr; ///< warnings, skipped points, errors
    /// Timestamp recorded in metadata; defaults to the current UTC time.
    std::function<std::string()> clock;
};

/// Executes the run spec and returns the process exit status.
int run(const RunSpec& spec, const RunContext& ctx);

} // namespace irs::cli

#endif // IRS_CLI_COMMANDS_HPP
