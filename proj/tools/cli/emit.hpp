// SPDX-License-Identifier: Apache-2.0
//
// CSV / JSON serialization of experiment records and the run metadata sidecar.

#ifndef IRS_CLI_EMIT_HPP
#define IRS_CLI_EMIT_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cli/run_spec.hpp"
#include "irs/experiments.hpp"

namespace irs::cli {

using Cell = std::variant<double, std::uint64_t, std::string>;

/// A record set with a fixed header, e.g. schema "heatmap" with columns x_m,y_m,snr_gain_db.
struct Table {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

Table heatmap_table(const SweepResult& sr);
Table cdf_table(const CdfSeries& series);
Table profile_table(std::span<const std::size_t> rows, std::span<const double> phases);
Table histogram_table(const PhaseHistogram& hist);
Table random_avg_table(std::span<const MethodAverage> averages);

/// Header line plus one line per row; reals use 15 significant digits.
std::string render_csv(const Table& table);
/// {"schema": ..., "columns": [...], "records": [{column: value, ...}, ...]}
std::string render_json(const Table& table);

/// Flat key=value text loadable by load_config(). The run spec, tool version and timestamp are
/// recorded as comment lines.
std::string render_metadata(const RunSpec& spec, const ScenarioConfig& effective,
                            const std::string& timestamp);

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes files into one directory. Each file is written to a temporary name and renamed into
/// place; unless commit() is called, every file written so far is removed on destruction.
class OutputWriter {
public:
    OutputWriter(std::filesystem::path dir, OutputFormat format);
    ~OutputWriter();

    OutputWriter(const OutputWriter&) = delete;
    OutputWriter& operator=(const OutputWriter&) = delete;

    /// Writes `table` as <stem>.csv or <stem>.json and returns the path.
    std::filesystem::path write_table(const std::string& stem, const Table& table);
    std::filesystem::path write_text(const std::string& filename, const std::string& text);

    void commit() { committed_ = true; }
    const std::vector<std::filesystem::path>& written() const { return written_; }

private:
    std::filesystem::path dir_;
    OutputFormat format_;
    std::vector<std::filesystem::path> written_;
    bool committed_ = false;
};

} // namespace irs::cli

#endif // IRS_CLI_EMIT_HPP
