// SPDX-License-Identifier: Apache-2.0

#include "irs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

#include "irs/parallel.hpp"

namespace irs {

std::vector<double> SweepResult::values() const
{
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(p.snr_gain_db);
    return out;
}

SweepResult sweep_points(const ScenarioConfig& scenario, const IrsGeometry& geom,
                         ControlScheme scheme, std::span<const Point3> ues,
                         const SweepOptions& options)
{
    scenario.validate();
    const ChannelParams params = channel_params(scenario);
    const LinkParams link = link_params(scenario);

    // One slot per UE so the result does not depend on how the range is partitioned.
    struct Slot {
        std::optional<double> gain;
        std::string error;
    };
    std::vector<Slot> slots(ues.size());

    const std::size_t workers = options.workers ? options.workers : default_worker_count();
    parallel_for(ues.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const ChannelSet ch = compute_channels(geom, scenario.ap_pos, ues[i], params);
                const double gain = snr_gain_db(ch, configure(ch, geom, scheme), link);
                if (!std::isfinite(gain))
                    throw std::domain_error("non-finite SNR gain");
                slots[i].gain = gain;
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        }
    });

    SweepResult sr;
    sr.scenario_id = scenario.id;
    sr.scheme = scheme;
    sr.bounds = scenario.map_bounds;
    sr.step_m = scenario.grid_step_m;
    sr.points.reserve(ues.size());
    for (std::size_t i = 0; i < ues.size(); ++i) {
        if (slots[i].gain)
            sr.points.push_back({ues[i], *slots[i].gain});
        else
            sr.skipped.push_back({ues[i], slots[i].error});
    }
    return sr;
}

SweepResult sweep(const ScenarioConfig& scenario, const IrsGeometry& geom, ControlScheme scheme,
                  const SweepOptions& options)
{
    const std::vector<Point3> grid = ue_grid(scenario);
    return sweep_points(scenario, geom, scheme, grid, options);
}

CdfSeries cdf(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("CDF of an empty sample");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    CdfSeries out;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i])
            continue;
        out.values.push_back(sorted[i]);
        out.fractions.push_back(static_cast<double>(i + 1) / n);
    }
    return out;
}

CdfSeries cdf(const SweepResult& sr)
{
    const std::vector<double> v = sr.values();
    return cdf(std::span<const double>(v));
}

double median(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("median of an empty sample");
    std::vector<double> v(samples.begin(), samples.end());
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1)
        return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

double fraction_at_or_below(const SweepResult& sr, double threshold_db)
{
    if (sr.points.empty())
        throw std::invalid_argument("fraction of an empty sweep");
    const auto hits = std::count_if(sr.points.begin(), sr.points.end(),
                                    [&](const GainSample& s) { return s.snr_gain_db <= threshold_db; });
    return static_cast<double>(hits) / static_cast<double>(sr.points.size());
}

double PhaseProfile::unwrapped_spread() const
{
    if (phases.empty())
        return 0.0;
    double current = phases.front();
    double lo = current;
    double hi = current;
    for (std::size_t i = 1; i < phases.size(); ++i) {
        double step = std::remainder(phases[i] - phases[i - 1], kTwoPi); // in [-pi, pi]
        current += step;
        lo = std::min(lo, current);
        hi = std::max(hi, current);
    }
    return hi - lo;
}

namespace {

void check_column(const IrsGeometry& geom, std::size_t column)
{
    if (column >= geom.n_cols()) {
        throw std::invalid_argument("column index " + std::to_string(column) +
                                    " out of range (array has " +
                                    std::to_string(geom.n_cols()) + " columns)");
    }
}

ChannelSet scenario_channels(const ScenarioConfig& scenario, const IrsGeometry& geom,
                             const Point3& ue)
{
    scenario.validate();
    return compute_channels(geom, scenario.ap_pos, ue, channel_params(scenario));
}

} // namespace

PhaseProfile phase_profile(const ScenarioConfig& scenario, const IrsGeometry& geom,
                           const Point3& ue, std::size_t column)
{
    check_column(geom, column);
    const ChannelSet ch = scenario_channels(scenario, geom, ue);

    PhaseProfile pp;
    pp.column = column;
    for (std::size_t row = 0; row < geom.n_rows(); ++row) {
        const std::size_t n = geom.index(row, column);
        pp.rows.push_back(row);
        pp.phases.push_back(wrap_phase(std::arg(ch.g[n]) + std::arg(ch.h_r_conj[n])));
    }
    return pp;
}

PhaseHistogram phase_histogram(const PhaseProfile& pp, std::size_t n_bins)
{
    if (n_bins == 0)
        throw std::invalid_argument("histogram needs at least one bin");

    PhaseHistogram h;
    const double width = kTwoPi / static_cast<double>(n_bins);
    for (std::size_t b = 0; b < n_bins; ++b) {
        h.bin_low.push_back(static_cast<double>(b) * width);
        h.bin_high.push_back(b + 1 == n_bins ? kTwoPi : static_cast<double>(b + 1) * width);
    }
    h.counts.assign(n_bins, 0);
    for (double phase : pp.phases) {
        const double wrapped = wrap_phase(phase);
        auto bin = static_cast<std::size_t>(wrapped / width);
        ++h.counts[std::min(bin, n_bins - 1)];
    }
    return h;
}

ReflectionProfile reflection_profile(const ScenarioConfig& scenario, const IrsGeometry& geom,
                                     const Point3& ue, std::size_t column, ControlScheme scheme)
{
    check_column(geom, column);
    const ChannelSet ch = scenario_channels(scenario, geom, ue);
    const ReflectionConfig rc = configure(ch, geom, scheme);

    ReflectionProfile rp;
    rp.column = column;
    rp.scheme = scheme;
    for (std::size_t row = 0; row < geom.n_rows(); ++row) {
        rp.rows.push_back(row);
        rp.phases.push_back(wrap_phase(std::arg(rc.coeffs[geom.index(row, column)])));
    }
    return rp;
}

Point3 default_diagnostic_ue(const ScenarioConfig& scenario)
{
    const auto& b = scenario.map_bounds;
    return {0.5 * (b.x_min + b.x_max), 0.5 * (b.y_min + b.y_max), scenario.ue_height};
}

std::string_view to_string(ConfigMethod method)
{
    switch (method) {
    case ConfigMethod::ElementContinuous: return "element-continuous";
    case ConfigMethod::QuantizedColumnBinary: return "quantized";
    case ConfigMethod::AscentColumnBinary: return "coordinate-ascent";
    case ConfigMethod::ExhaustiveColumnBinary: return "exhaustive";
    }
    return "unknown";
}

std::optional<ConfigMethod> parse_method(std::string_view name)
{
    for (ConfigMethod m : {ConfigMethod::ElementContinuous, ConfigMethod::QuantizedColumnBinary,
                           ConfigMethod::AscentColumnBinary, ConfigMethod::ExhaustiveColumnBinary}) {
        if (to_string(m) == name)
            return m;
    }
    return std::nullopt;
}

std::vector<Point3> draw_random_ues(const ScenarioConfig& scenario, std::size_t n_ue,
                                    std::uint64_t seed)
{
    scenario.validate();
    const auto& b = scenario.map_bounds;
    // Top 53 bits of a 64-bit draw mapped to [0, 1); keeps the sequence portable across
    // standard library implementations.
    auto unit = [](std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    constexpr int kMaxAttempts = 100000;
    std::vector<Point3> ues;
    ues.reserve(n_ue);
    for (std::size_t i = 0; i < n_ue; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            const double x = b.x_min + unit(rng) * (b.x_max - b.x_min);
            const double y = b.y_min + unit(rng) * (b.y_max - b.y_min);
            const Point3 p{x, y, scenario.ue_height};
            if (!is_excluded(scenario, p)) {
                ues.push_back(p);
                placed = true;
            }
        }
        if (!placed)
            throw std::invalid_argument("map leaves no room for UEs outside the exclusion zones");
    }
    return ues;
}

double method_snr_db(const ScenarioConfig& scenario, const IrsGeometry& geom, const Point3& ue,
                     ConfigMethod method, std::size_t exhaustive_cap)
{
    const ChannelSet ch = scenario_channels(scenario, geom, ue);
    const LinkParams link = link_params(scenario);

    switch (method) {
    case ConfigMethod::ElementContinuous:
        return snr_db(effective_gain(ch, configure(ch, geom, ControlScheme::ElementContinuous)), link);
    case ConfigMethod::QuantizedColumnBinary:
        return snr_db(effective_gain(ch, configure(ch, geom, ControlScheme::ColumnBinary)), link);
    case ConfigMethod::AscentColumnBinary: {
        const auto init = configure(ch, geom, ControlScheme::ColumnBinary);
        return snr_db(effective_gain(ch, coordinate_ascent_column_binary(ch, geom, init).config), link);
    }
    case ConfigMethod::ExhaustiveColumnBinary:
        return snr_db(effective_gain(ch, exhaustive_column_binary(ch, geom, exhaustive_cap).config), link);
    }
    throw std::invalid_argument("unknown configuration method");
}

std::vector<MethodAverage> random_ue_average(const ScenarioConfig& scenario,
                                             const IrsGeometry& geom,
                                             std::span<const ConfigMethod> methods,
                                             std::size_t n_ue, std::uint64_t seed,
                                             std::size_t exhaustive_cap,
                                             const SweepOptions& options)
{
    if (n_ue == 0)
        throw std::invalid_argument("random_ue_average needs at least one UE");
    for (ConfigMethod m : methods) {
        if (m == ConfigMethod::ExhaustiveColumnBinary && geom.n_cols() > exhaustive_cap) {
            throw SearchCapacityError("exhaustive search needs N_x <= " +
                                      std::to_string(exhaustive_cap) + ", array has " +
                                      std::to_string(geom.n_cols()) +
                                      " columns; use coordinate-ascent instead");
        }
    }

    const std::vector<Point3> ues = draw_random_ues(scenario, n_ue, seed);
    const std::size_t n_methods = methods.size();
    std::vector<double> snr(n_ue * n_methods);

    const std::size_t workers = options.workers ? options.workers : default_worker_count();
    parallel_for(n_ue, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t m = 0; m < n_methods; ++m)
                snr[i * n_methods + m] = method_snr_db(scenario, geom, ues[i], methods[m], exhaustive_cap);
        }
    });

    std::vector<MethodAverage> table;
    for (std::size_t m = 0; m < n_methods; ++m) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n_ue; ++i)
            sum += snr[i * n_methods + m];
        table.push_back({methods[m], sum / static_cast<double>(n_ue), n_ue, seed});
    }
    return table;
}

} // namespace irs
