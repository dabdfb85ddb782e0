// SPDX-License-Identifier: Apache-2.0

#include "cli/run_spec.hpp"

#include <algorithm>
#include <map>

#include <CLI11.hpp>

namespace irs::cli {

std::string to_string(Subcommand cmd)
{
    switch (cmd) {
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Cdf: return "cdf";
    case Subcommand::PhaseProfile: return "phase-profile";
    case Subcommand::PhaseHist: return "phase-hist";
    case Subcommand::ReflectionProfile: return "reflection-profile";
    case Subcommand::RandomAvg: return "random-avg";
    case Subcommand::Compare: return "compare";
    }
    return "unknown";
}

std::string to_string(OutputFormat fmt)
{
    return fmt == OutputFormat::Json ? "json" : "csv";
}

namespace {

struct RawOptions {
    int scenario = 0;
    std::string config;
    std::vector<std::string> schemes;
    bool all_schemes = false;
    std::size_t nx = 0;
    std::size_t ny = 0;
    double grid_step = 0.0;
    std::uint64_t seed = 1;
    std::size_t n_ue = 100;
    std::string out;
    std::string format = "csv";
    std::vector<double> ue;
    std::size_t column = 0;
    std::size_t bins = kDefaultHistogramBins;
    std::vector<std::string> methods;
    std::size_t exhaustive_cap = kDefaultExhaustiveCap;
};

std::vector<std::string> scheme_names()
{
    std::vector<std::string> names;
    for (ControlScheme s : kAllSchemes)
        names.emplace_back(to_string(s));
    return names;
}

std::vector<std::string> method_names()
{
    return {"element-continuous", "quantized", "coordinate-ascent", "exhaustive"};
}

struct Handles {
    CLI::Option* scenario = nullptr;
    CLI::Option* config = nullptr;
    CLI::Option* nx = nullptr;
    CLI::Option* ny = nullptr;
    CLI::Option* grid_step = nullptr;
    CLI::Option* ue = nullptr;
    CLI::Option* column = nullptr;
};

Handles add_common(CLI::App* sub, RawOptions& raw)
{
    Handles h;
    h.scenario = sub->add_option("--scenario", raw.scenario, "Deployment preset (1, 2 or 3)")
                     ->check(CLI::IsMember({1, 2, 3}));
    h.config = sub->add_option("--config", raw.config, "Flat key=value scenario file")
                   ->check(CLI::ExistingFile);
    h.scenario->excludes(h.config);
    h.nx = sub->add_option("--nx", raw.nx, "IRS columns")->check(CLI::PositiveNumber);
    h.ny = sub->add_option("--ny", raw.ny, "IRS elements per column")->check(CLI::PositiveNumber);
    sub->add_option("--out", raw.out, "Output directory")->required();
    sub->add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    return h;
}

void add_scheme_options(CLI::App* sub, RawOptions& raw)
{
    sub->add_option("--scheme", raw.schemes, "Control scheme (repeatable)")
        ->check(CLI::IsMember(scheme_names()));
    sub->add_flag("--all-schemes", raw.all_schemes, "Run all four control schemes");
}

void add_grid_step(CLI::App* sub, RawOptions& raw, Handles& h)
{
    h.grid_step = sub->add_option("--grid-step", raw.grid_step, "UE grid step in meters")
                      ->check(CLI::PositiveNumber);
}

void add_diagnostic_ue(CLI::App* sub, RawOptions& raw, Handles& h)
{
    h.ue = sub->add_option("--ue", raw.ue, "Diagnostic UE position x,y (default: map midpoint)")
               ->expected(2)
               ->delimiter(',');
    h.column = sub->add_option("--column", raw.column, "IRS column index (default: N_x / 2)");
}

} // namespace

RunSpec parse_args(const std::vector<std::string>& args)
{
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return parse_args(static_cast<int>(argv.size()), argv.data());
}

RunSpec parse_args(int argc, const char* const* argv)
{
    CLI::App app{"Link-budget simulator for column-wise and 1-bit IRS control", "irs-sim"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    RawOptions raw;
    std::map<CLI::App*, std::pair<Subcommand, Handles>> subs;

    auto* sweep = app.add_subcommand("sweep", "SNR-gain heatmap over the UE grid");
    auto h_sweep = add_common(sweep, raw);
    add_scheme_options(sweep, raw);
    add_grid_step(sweep, raw, h_sweep);
    subs[sweep] = {Subcommand::Sweep, h_sweep};

    auto* cdf = app.add_subcommand("cdf", "Empirical CDF of the SNR gain over the UE grid");
    auto h_cdf = add_common(cdf, raw);
    add_scheme_options(cdf, raw);
    add_grid_step(cdf, raw, h_cdf);
    subs[cdf] = {Subcommand::Cdf, h_cdf};

    auto* pp = app.add_subcommand("phase-profile", "Propagation phase along one IRS column");
    auto h_pp = add_common(pp, raw);
    add_diagnostic_ue(pp, raw, h_pp);
    subs[pp] = {Subcommand::PhaseProfile, h_pp};

    auto* ph = app.add_subcommand("phase-hist", "Histogram of the column propagation phases");
    auto h_ph = add_common(ph, raw);
    add_diagnostic_ue(ph, raw, h_ph);
    ph->add_option("--bins", raw.bins, "Number of bins over [0, 2pi)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    subs[ph] = {Subcommand::PhaseHist, h_ph};

    auto* rp = app.add_subcommand("reflection-profile", "Reflection phases applied to one column");
    auto h_rp = add_common(rp, raw);
    add_diagnostic_ue(rp, raw, h_rp);
    add_scheme_options(rp, raw);
    subs[rp] = {Subcommand::ReflectionProfile, h_rp};

    auto* ra = app.add_subcommand("random-avg", "Mean SNR over random UEs per configuration method");
    auto h_ra = add_common(ra, raw);
    ra->add_option("--n-ue", raw.n_ue, "Number of random UEs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ra->add_option("--seed", raw.seed, "RNG seed")->capture_default_str();
    ra->add_option("--method", raw.methods, "Configuration method (repeatable)")
        ->check(CLI::IsMember(method_names()));
    ra->add_option("--exhaustive-cap", raw.exhaustive_cap, "Largest N_x for exhaustive search")
        ->capture_default_str();
    subs[ra] = {Subcommand::RandomAvg, h_ra};

    auto* cmp = app.add_subcommand("compare", "Heatmaps and CDFs for several schemes");
    auto h_cmp = add_common(cmp, raw);
    add_scheme_options(cmp, raw);
    add_grid_step(cmp, raw, h_cmp);
    subs[cmp] = {Subcommand::Compare, h_cmp};

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), 0);
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
    } catch (const CLI::CallForVersion&) {
        throw UsageError(kToolVersion, 0);
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\nRun with --help for usage.", 2);
    }

    CLI::App* chosen = app.get_subcommands().front();
    const auto& [cmd, h] = subs.at(chosen);

    RunSpec spec;
    spec.subcommand = cmd;
    if (h.config->count() > 0)
        spec.config_path = raw.config;
    else
        spec.scenario_id = h.scenario->count() > 0 ? raw.scenario : 1;
    if (h.nx->count() > 0)
        spec.nx = raw.nx;
    if (h.ny->count() > 0)
        spec.ny = raw.ny;
    if (h.grid_step && h.grid_step->count() > 0)
        spec.grid_step = raw.grid_step;
    if (h.ue && h.ue->count() > 0)
        spec.ue_xy = std::pair{raw.ue.at(0), raw.ue.at(1)};
    if (h.column && h.column->count() > 0)
        spec.column = raw.column;
    spec.seed = raw.seed;
    spec.n_ue = raw.n_ue;
    spec.out_dir = raw.out;
    spec.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    spec.bins = raw.bins;
    spec.exhaustive_cap = raw.exhaustive_cap;

    if (raw.all_schemes) {
        spec.schemes.assign(kAllSchemes.begin(), kAllSchemes.end());
    } else {
        for (const auto& name : raw.schemes) {
            const ControlScheme s = *parse_scheme(name);
            if (std::find(spec.schemes.begin(), spec.schemes.end(), s) == spec.schemes.end())
                spec.schemes.push_back(s);
        }
    }
    if (spec.schemes.empty()) {
        if (cmd == Subcommand::Compare) {
            spec.schemes.assign(kAllSchemes.begin(), kAllSchemes.end());
        } else if (cmd == Subcommand::Sweep || cmd == Subcommand::Cdf ||
                   cmd == Subcommand::ReflectionProfile) {
            throw UsageError("--scheme is required for '" + to_string(cmd) +
                                 "'; valid schemes: element-continuous, element-binary, "
                                 "column-continuous, column-binary (or --all-schemes)",
                             2);
        }
    }

    for (const auto& name : raw.methods) {
        const ConfigMethod m = *parse_method(name);
        if (std::find(spec.methods.begin(), spec.methods.end(), m) == spec.methods.end())
            spec.methods.push_back(m);
    }
    return spec;
}

} // namespace irs::cli
