// SPDX-License-Identifier: Apache-2.0
//
// Experiment drivers: coverage sweeps, CDFs, column phase diagnostics and the random-UE
// optimizer comparison.

#ifndef IRS_EXPERIMENTS_HPP
#define IRS_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irs/channel.hpp"
#include "irs/geometry.hpp"
#include "irs/link_metrics.hpp"
#include "irs/phase_control.hpp"

namespace irs {

struct GainSample {
    Point3 ue;
    double snr_gain_db = 0.0;
};

/// A grid point that could not be evaluated, with the reason.
struct SkippedPoint {
    Point3 ue;
    std::string reason;
};

struct SweepResult {
    int scenario_id = 0;
    ControlScheme scheme = ControlScheme::ElementContinuous;
    MapBounds bounds;
    double step_m = 0.0;
    std::vector<GainSample> points;
    std::vector<SkippedPoint> skipped;

    std::vector<double> values() const;
};

struct SweepOptions {
    /// 0 selects default_worker_count().
    std::size_t workers = 0;
};

/// Evaluates snr_gain_db for every UE on the scenario grid. Points whose channels cannot be
/// computed are moved to `skipped`; the remaining points keep grid order.
SweepResult sweep(const ScenarioConfig& scenario, const IrsGeometry& geom, ControlScheme scheme,
                  const SweepOptions& options = {});

/// Same as sweep() over an explicit list of UE positions.
SweepResult sweep_points(const ScenarioConfig& scenario, const IrsGeometry& geom,
                         ControlScheme scheme, std::span<const Point3> ues,
                         const SweepOptions& options = {});

/// Empirical CDF: sorted values with cumulative fractions (i + 1) / n. Tied values collapse to
/// one step carrying the fraction of the last duplicate.
struct CdfSeries {
    std::vector<double> values;
    std::vector<double> fractions;

    std::size_t size() const { return values.size(); }
};

CdfSeries cdf(const SweepResult& sr);
CdfSeries cdf(std::span<const double> samples);

/// Median (mean of the two central order statistics for even counts).
/// Throws std::invalid_argument on empty input.
double median(std::span<const double> samples);

/// Share of sweep points with a gain at or below `threshold_db`.
double fraction_at_or_below(const SweepResult& sr, double threshold_db);

/// Propagation phase omega_n = mod(arg g[n] + arg h_r_conj[n], 2*pi) along one column,
/// ordered top to bottom.
struct PhaseProfile {
    std::size_t column = 0;
    std::vector<std::size_t> rows;
    std::vector<double> phases;

    std::size_t size() const { return phases.size(); }
    /// max - min of the phase sequence after unwrapping along the column.
    double unwrapped_spread() const;
};

PhaseProfile phase_profile(const ScenarioConfig& scenario, const IrsGeometry& geom,
                           const Point3& ue, std::size_t column);

inline constexpr std::size_t kDefaultHistogramBins = 16;

struct PhaseHistogram {
    std::vector<double> bin_low;
    std::vector<double> bin_high;
    std::vector<std::size_t> counts;
};

/// Uniform bins over [0, 2*pi).
PhaseHistogram phase_histogram(const PhaseProfile& pp, std::size_t n_bins = kDefaultHistogramBins);

/// Reflection phases applied to one column under `scheme`, top to bottom. Binary schemes
/// report arg(+1) = 0 or arg(-1) = pi.
struct ReflectionProfile {
    std::size_t column = 0;
    ControlScheme scheme = ControlScheme::ElementContinuous;
    std::vector<std::size_t> rows;
    std::vector<double> phases;
};

ReflectionProfile reflection_profile(const ScenarioConfig& scenario, const IrsGeometry& geom,
                                     const Point3& ue, std::size_t column, ControlScheme scheme);

/// Map midpoint at UE height; the default UE for the column diagnostics.
Point3 default_diagnostic_ue(const ScenarioConfig& scenario);

/// Configuration methods compared over random UEs.
enum class ConfigMethod {
    ElementContinuous,    ///< ideal co-phasing reference
    QuantizedColumnBinary,
    AscentColumnBinary,
    ExhaustiveColumnBinary,
};

std::string_view to_string(ConfigMethod method);
std::optional<ConfigMethod> parse_method(std::string_view name);

struct MethodAverage {
    ConfigMethod method = ConfigMethod::QuantizedColumnBinary;
    double mean_snr_db = 0.0;
    std::size_t n_ue = 0;
    std::uint64_t seed = 0;
};

/// n_ue positions drawn uniformly over the map at UE height, redrawing excluded positions.
/// Draw i depends only on (seed, i).
std::vector<Point3> draw_random_ues(const ScenarioConfig& scenario, std::size_t n_ue,
                                    std::uint64_t seed);

/// SNR of a single UE under `method`, in dB.
double method_snr_db(const ScenarioConfig& scenario, const IrsGeometry& geom, const Point3& ue,
                     ConfigMethod method, std::size_t exhaustive_cap = kDefaultExhaustiveCap);

/// Arithmetic mean over random UEs of the per-UE SNR in dB, one row per requested method.
/// Throws SearchCapacityError if the exhaustive method is requested with N_x above the cap.
std::vector<MethodAverage> random_ue_average(const ScenarioConfig& scenario,
                                             const IrsGeometry& geom,
                                             std::span<const ConfigMethod> methods,
                                             std::size_t n_ue, std::uint64_t seed,
                                             std::size_t exhaustive_cap = kDefaultExhaustiveCap,
                                             const SweepOptions& options = {});

} // namespace irs

#endif // IRS_EXPERIMENTS_HPP
