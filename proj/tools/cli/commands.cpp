// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <ostream>
#include <sstream>

#include "cli/config_file.hpp"
#include "cli/emit.hpp"
#include "irs/experiments.hpp"
#include "irs/parallel.hpp"

namespace irs::cli {

namespace {

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string scenario_tag(const ScenarioConfig& cfg)
{
    return cfg.id > 0 ? "s" + std::to_string(cfg.id) : std::string("custom");
}

void report_skips(const SweepResult& sr, std::ostream& diag)
{
    for (const auto& s : sr.skipped) {
        diag << "warning: skipped UE (" << s.ue.x << ", " << s.ue.y << ", " << s.ue.z
             << ") under " << to_string(sr.scheme) << ": " << s.reason << '\n';
    }
}

std::size_t pick_column(const RunSpec& spec, const IrsGeometry& geom)
{
    const std::size_t k = spec.column.value_or(geom.n_cols() / 2);
    if (k >= geom.n_cols()) {
        throw UsageError("--column " + std::to_string(k) + " out of range (array has " +
                             std::to_string(geom.n_cols()) + " columns)",
                         2);
    }
    return k;
}

Point3 pick_ue(const RunSpec& spec, const ScenarioConfig& cfg)
{
    if (spec.ue_xy)
        return {spec.ue_xy->first, spec.ue_xy->second, cfg.ue_height};
    return default_diagnostic_ue(cfg);
}

std::string median_line(const SweepResult& sr)
{
    std::ostringstream line;
    const auto v = sr.values();
    line << to_string(sr.scheme) << ": median gain " << median(v) << " dB over " << v.size()
         << " points, " << 100.0 * fraction_at_or_below(sr, 0.0) << "% at or below 0 dB";
    return line.str();
}

} // namespace

ScenarioConfig effective_scenario(const RunSpec& spec, std::ostream* log)
{
    ScenarioConfig cfg = spec.config_path ? load_config(*spec.config_path, log)
                                          : scenario_preset(spec.scenario_id.value_or(1));
    auto note = [&](const char* what, const std::string& value) {
        if (log)
            *log << "override: " << what << " = " << value << " (command line)\n";
    };
    if (spec.nx) {
        cfg.array_cols = *spec.nx;
        note("nx", std::to_string(*spec.nx));
    }
    if (spec.ny) {
        cfg.array_rows = *spec.ny;
        note("ny", std::to_string(*spec.ny));
    }
    if (spec.grid_step) {
        cfg.grid_step_m = *spec.grid_step;
        std::ostringstream v;
        v << *spec.grid_step;
        note("grid_step_m", v.str());
    }
    cfg.validate();
    return cfg;
}

int run(const RunSpec& spec, const RunContext& ctx)
{
    std::ostream& out = *ctx.out;
    std::ostream& diag = *ctx.diag;

    if (const char* env = std::getenv(kThreadsEnvVar)) {
        if (!parse_thread_count(env)) {
            diag << "error: " << kThreadsEnvVar << " must be a positive integer, got '" << env
                 << "'\n";
            return 2;
        }
    }

    try {
        const ScenarioConfig cfg = effective_scenario(spec, &diag);
        const IrsGeometry geom = build_irs_array(cfg);
        const std::string tag = scenario_tag(cfg);

        OutputWriter writer(spec.out_dir, spec.format);
        auto emit = [&](const std::string& stem, const Table& table) {
            out << "wrote " << writer.write_table(stem, table).string() << '\n';
        };

        switch (spec.subcommand) {
        case Subcommand::Sweep:
        case Subcommand::Cdf:
        case Subcommand::Compare:
            for (ControlScheme scheme : spec.schemes) {
                const SweepResult sr = sweep(cfg, geom, scheme);
                report_skips(sr, diag);
                if (sr.points.empty())
                    throw std::runtime_error("no evaluable UE positions for " +
                                             std::string(to_string(scheme)));
                const std::string name = std::string(to_string(scheme));
                if (spec.subcommand != Subcommand::Cdf)
                    emit("heatmap_" + tag + "_" + name, heatmap_table(sr));
                if (spec.subcommand != Subcommand::Sweep)
                    emit("cdf_" + tag + "_" + name, cdf_table(cdf(sr)));
                if (spec.subcommand == Subcommand::Compare)
                    out << median_line(sr) << '\n';
            }
            break;

        case Subcommand::PhaseProfile: {
            const std::size_t k = pick_column(spec, geom);
            const PhaseProfile pp = phase_profile(cfg, geom, pick_ue(spec, cfg), k);
            emit("phase_profile_" + tag + "_col" + std::to_string(k),
                 profile_table(pp.rows, pp.phases));
            out << "unwrapped spread " << pp.unwrapped_spread() << " rad\n";
            break;
        }

        case Subcommand::PhaseHist: {
            const std::size_t k = pick_column(spec, geom);
            const PhaseProfile pp = phase_profile(cfg, geom, pick_ue(spec, cfg), k);
            emit("phase_hist_" + tag + "_col" + std::to_string(k),
                 histogram_table(phase_histogram(pp, spec.bins)));
            break;
        }

        case Subcommand::ReflectionProfile: {
            const std::size_t k = pick_column(spec, geom);
            for (ControlScheme scheme : spec.schemes) {
                const ReflectionProfile rp = reflection_profile(cfg, geom, pick_ue(spec, cfg), k, scheme);
                emit("reflection_profile_" + tag + "_col" + std::to_string(k) + "_" +
                         std::string(to_string(scheme)),
                     profile_table(rp.rows, rp.phases));
            }
            break;
        }

        case Subcommand::RandomAvg: {
            std::vector<ConfigMethod> methods = spec.methods;
            if (methods.empty()) {
                methods = {ConfigMethod::ElementContinuous, ConfigMethod::QuantizedColumnBinary,
                           ConfigMethod::AscentColumnBinary};
                if (geom.n_cols() <= spec.exhaustive_cap)
                    methods.push_back(ConfigMethod::ExhaustiveColumnBinary);
                else
                    diag << "note: exhaustive search skipped (N_x = " << geom.n_cols()
                         << " exceeds cap " << spec.exhaustive_cap << ")\n";
            }
            const auto table = random_ue_average(cfg, geom, methods, spec.n_ue, spec.seed,
                                                 spec.exhaustive_cap);
            emit("random_avg_" + tag, random_avg_table(table));
            for (const auto& row : table)
                out << to_string(row.method) << ": mean SNR " << row.mean_snr_db << " dB\n";
            break;
        }
        }

        const std::string stamp = ctx.clock ? ctx.clock() : utc_now();
        writer.write_text(to_string(spec.subcommand) + "_" + tag + ".meta",
                          render_metadata(spec, cfg, stamp));
        writer.commit();
        return 0;
    } catch (const UsageError& e) {
        diag << "error: " << e.what() << '\n';
        return e.exit_code() ? e.exit_code() : 2;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace irs::cli
