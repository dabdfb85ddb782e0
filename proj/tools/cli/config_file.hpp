// SPDX-License-Identifier: Apache-2.0
//
// Flat key=value scenario files.
//
//   # comment
//   ap_z = 5
//   irs_z = 2.5
//
// Recognized keys: ap_x, ap_y, ap_z, irs_x, irs_y, irs_z, ue_z, freq_hz, tx_power_w,
// noise_power_w, alpha, d0_m, grid_step_m, nx, ny. Missing keys keep the scenario-1 preset.

#ifndef IRS_CLI_CONFIG_FILE_HPP
#define IRS_CLI_CONFIG_FILE_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "irs/geometry.hpp"

namespace irs::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a scenario from `in`; `source` names the input in error messages. Every override is
/// reported on `log` when given. Throws ConfigError with the offending line number.
ScenarioConfig parse_config(std::istream& in, const std::string& source, std::ostream* log = nullptr);

ScenarioConfig load_config(const std::filesystem::path& path, std::ostream* log = nullptr);

/// Writes every recognized key with round-trip precision.
void write_config(std::ostream& out, const ScenarioConfig& cfg);

} // namespace irs::cli

#endif // IRS_CLI_CONFIG_FILE_HPP
