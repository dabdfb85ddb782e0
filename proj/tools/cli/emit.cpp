// SPDX-License-Identifier: Apache-2.0

#include "cli/emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/config_file.hpp"

namespace irs::cli {

namespace {

std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string format_cell(const Cell& cell)
{
    if (const auto* d = std::get_if<double>(&cell))
        return format_real(*d);
    if (const auto* u = std::get_if<std::uint64_t>(&cell))
        return std::to_string(*u);
    return std::get<std::string>(cell);
}

std::string join_schemes(const std::vector<ControlScheme>& schemes)
{
    std::string out;
    for (auto s : schemes) {
        if (!out.empty())
            out += ',';
        out += to_string(s);
    }
    return out;
}

std::string join_methods(const std::vector<ConfigMethod>& methods)
{
    std::string out;
    for (auto m : methods) {
        if (!out.empty())
            out += ',';
        out += to_string(m);
    }
    return out;
}

} // namespace

Table heatmap_table(const SweepResult& sr)
{
    Table t{"heatmap", {"x_m", "y_m", "snr_gain_db"}, {}};
    for (const auto& p : sr.points)
        t.rows.push_back({p.ue.x, p.ue.y, p.snr_gain_db});
    return t;
}

Table cdf_table(const CdfSeries& series)
{
    Table t{"cdf", {"snr_gain_db", "cum_fraction"}, {}};
    for (std::size_t i = 0; i < series.size(); ++i)
        t.rows.push_back({series.values[i], series.fractions[i]});
    return t;
}

Table profile_table(std::span<const std::size_t> rows, std::span<const double> phases)
{
    Table t{"phase_profile", {"row_index", "phase_rad"}, {}};
    for (std::size_t i = 0; i < rows.size() && i < phases.size(); ++i)
        t.rows.push_back({static_cast<std::uint64_t>(rows[i]), phases[i]});
    return t;
}

Table histogram_table(const PhaseHistogram& hist)
{
    Table t{"histogram", {"bin_low_rad", "bin_high_rad", "count"}, {}};
    for (std::size_t b = 0; b < hist.counts.size(); ++b)
        t.rows.push_back({hist.bin_low[b], hist.bin_high[b], static_cast<std::uint64_t>(hist.counts[b])});
    return t;
}

Table random_avg_table(std::span<const MethodAverage> averages)
{
    Table t{"random_avg", {"method", "mean_snr_db", "n_ue", "seed"}, {}};
    for (const auto& a : averages)
        t.rows.push_back({std::string(to_string(a.method)), a.mean_snr_db,
                          static_cast<std::uint64_t>(a.n_ue), a.seed});
    return t;
}

std::string render_csv(const Table& table)
{
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& table)
{
    nlohmann::ordered_json doc;
    doc["schema"] = table.schema;
    doc["columns"] = table.columns;
    auto records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c)
            std::visit([&](const auto& v) { rec[table.columns[c]] = v; }, row[c]);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

std::string render_metadata(const RunSpec& spec, const ScenarioConfig& effective,
                            const std::string& timestamp)
{
    std::ostringstream out;
    out << "# irs-sim run metadata\n";
    out << "# tool_version: " << kToolVersion << '\n';
    out << "# timestamp: " << timestamp << '\n';
    out << "# run.subcommand: " << to_string(spec.subcommand) << '\n';
    if (spec.scenario_id)
        out << "# run.scenario: " << *spec.scenario_id << '\n';
    if (spec.config_path)
        out << "# run.config: " << *spec.config_path << '\n';
    if (!spec.schemes.empty())
        out << "# run.schemes: " << join_schemes(spec.schemes) << '\n';
    if (!spec.methods.empty())
        out << "# run.methods: " << join_methods(spec.methods) << '\n';
    if (spec.nx)
        out << "# run.nx: " << *spec.nx << '\n';
    if (spec.ny)
        out << "# run.ny: " << *spec.ny << '\n';
    if (spec.grid_step)
        out << "# run.grid_step: " << format_real(*spec.grid_step) << '\n';
    if (spec.ue_xy)
        out << "# run.ue: " << format_real(spec.ue_xy->first) << ','
            << format_real(spec.ue_xy->second) << '\n';
    if (spec.column)
        out << "# run.column: " << *spec.column << '\n';
    out << "# run.bins: " << spec.bins << '\n';
    out << "# run.seed: " << spec.seed << '\n';
    out << "# run.n_ue: " << spec.n_ue << '\n';
    out << "# run.exhaustive_cap: " << spec.exhaustive_cap << '\n';
    out << "# run.out: " << spec.out_dir << '\n';
    out << "# run.format: " << to_string(spec.format) << '\n';
    out << "# effective scenario\n";
    write_config(out, effective);
    return out.str();
}

OutputWriter::OutputWriter(std::filesystem::path dir, OutputFormat format)
    : dir_(std::move(dir)), format_(format)
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
        throw OutputError("cannot create output directory '" + dir_.string() + "'");
}

OutputWriter::~OutputWriter()
{
    if (committed_)
        return;
    for (const auto& p : written_) {
        std::error_code ec;
        std::filesystem::remove(p, ec);
    }
}

std::filesystem::path OutputWriter::write_table(const std::string& stem, const Table& table)
{
    if (format_ == OutputFormat::Json)
        return write_text(stem + ".json", render_json(table));
    return write_text(stem + ".csv", render_csv(table));
}

std::filesystem::path OutputWriter::write_text(const std::string& filename, const std::string& text)
{
    const auto target = dir_ / filename;
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw OutputError("failed to write '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw OutputError("failed to move '" + tmp.string() + "' into place");
    }
    written_.push_back(target);
    return target;
}

} // namespace irs::cli
