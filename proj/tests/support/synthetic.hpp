// SPDX-License-Identifier: Apache-2.0
//
// Test-only helpers: seeded synthetic channels and brute-force oracles that do not share code
// paths with the library implementations they check.

#ifndef IRS_TESTS_SYNTHETIC_HPP
#define IRS_TESTS_SYNTHETIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "irs/channel.hpp"
#include "irs/geometry.hpp"

namespace irs::testing {

/// Unit-spacing lattice with the given shape; only the indexing matters for synthetic channels.
inline IrsGeometry synthetic_geometry(std::size_t n_cols, std::size_t n_rows)
{
    return IrsGeometry(n_cols, n_rows, 1.0, Point3{0.0, 0.0, 0.0});
}

struct SyntheticOptions {
    double direct_amplitude = 1.0;    ///< |h_d_conj|
    double min_amplitude = 0.2;       ///< per-link amplitudes drawn from [min, max]
    double max_amplitude = 1.0;
    bool unit_amplitudes = false;
};

/// Channel set with independent uniform phases on every link.
inline ChannelSet random_channels(std::size_t n, std::uint64_t seed, const SyntheticOptions& opt = {})
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> amp(opt.min_amplitude, opt.max_amplitude);
    auto draw = [&] {
        const double a = opt.unit_amplitudes ? 1.0 : amp(rng);
        return std::polar(a, phase(rng));
    };
    ChannelSet ch;
    for (std::size_t i = 0; i < n; ++i) {
        ch.g.push_back(draw());
        ch.h_r_conj.push_back(draw());
    }
    ch.h_d_conj = std::polar(opt.direct_amplitude, phase(rng));
    return ch;
}

/// Channels of a real deployment: scenario preset `scenario_id` with an n_cols x n_rows array and
/// a UE drawn uniformly over the map (outside the exclusion zones) from `seed`.
inline ChannelSet scenario_channels(int scenario_id, std::size_t n_cols, std::size_t n_rows,
                                    std::uint64_t seed, IrsGeometry* geom_out = nullptr)
{
    ScenarioConfig cfg = scenario_preset(scenario_id);
    cfg.array_cols = n_cols;
    cfg.array_rows = n_rows;
    const IrsGeometry geom = build_irs_array(cfg);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> x(cfg.map_bounds.x_min, cfg.map_bounds.x_max);
    std::uniform_real_distribution<double> y(cfg.map_bounds.y_min, cfg.map_bounds.y_max);
    Point3 ue;
    do {
        ue = {x(rng), y(rng), cfg.ue_height};
    } while (is_excluded(cfg, ue));
    if (geom_out)
        *geom_out = geom;
    return compute_channels(geom, cfg.ap_pos, ue, channel_params(cfg));
}

struct BruteForceOptimum {
    std::vector<int> signs;
    double power = -1.0;
};

/// Enumerates every column sign vector and evaluates the received power element by element.
/// Sign vectors whose power agrees with the best to within `rel_tie` count as ties and resolve
/// to the lexicographically smallest vector (+1 before -1).
inline BruteForceOptimum brute_force_column_binary(const ChannelSet& ch, const IrsGeometry& geom,
                                                   double rel_tie = 1e-12)
{
    const std::size_t n_cols = geom.n_cols();
    std::vector<int> signs(n_cols, 1);
    BruteForceOptimum best;

    // Odometer over signs: column 0 is the most significant digit, +1 counts as 0.
    while (true) {
        std::complex<double> sum = ch.h_d_conj;
        for (std::size_t n = 0; n < geom.size(); ++n)
            sum += static_cast<double>(signs[n % n_cols]) * ch.h_r_conj[n] * ch.g[n];
        const double power = std::norm(sum);
        // Enumeration is in lexicographic order, so an earlier vector wins a tie.
        if (power > best.power * (1.0 + rel_tie) || best.power < 0.0) {
            best.power = power;
            best.signs = signs;
        }

        std::size_t k = n_cols;
        while (k > 0 && signs[k - 1] == -1) {
            signs[k - 1] = 1;
            --k;
        }
        if (k == 0)
            break;
        signs[k - 1] = -1;
    }
    return best;
}

/// Exact maximum of |h_d + sum_k s_k c_k|^2 over sign vectors. For any direction phi the best
/// signs are s_k = sign(Re(c_k e^{-j phi})), so only the sign patterns between consecutive
/// boundary angles need to be evaluated: at most 2 N_x candidates instead of 2^N_x.
inline BruteForceOptimum angular_column_optimum(const std::vector<std::complex<double>>& c,
                                                std::complex<double> h_d)
{
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<double> edges;
    for (const auto& ck : c) {
        if (ck == std::complex<double>{})
            continue;
        const double a = std::arg(ck) + 0.5 * 3.14159265358979323846;
        edges.push_back(a - two_pi * std::floor(a / two_pi));
        const double b = a + 3.14159265358979323846;
        edges.push_back(b - two_pi * std::floor(b / two_pi));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<double> probes;
    if (edges.empty())
        probes.push_back(0.0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double next = i + 1 < edges.size() ? edges[i + 1] : edges.front() + two_pi;
        probes.push_back(0.5 * (edges[i] + next));
    }

    BruteForceOptimum best;
    std::vector<int> signs(c.size());
    for (double phi : probes) {
        const std::complex<double> dir = std::polar(1.0, -phi);
        std::complex<double> sum = h_d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            signs[k] = (c[k] * dir).real() >= 0.0 ? 1 : -1;
            sum += static_cast<double>(signs[k]) * c[k];
        }
        if (std::norm(sum) > best.power) {
            best.power = std::norm(sum);
            best.signs = signs;
        }
    }
    return best;
}

/// Free-space power gain in dB at distance d: 20 log10(lambda / (4 pi d)).
inline double friis_power_db(double wavelength, double d)
{
    return 20.0 * std::log10(wavelength / (4.0 * 3.14159265358979323846 * d));
}

} // namespace irs::testing

#endif // IRS_TESTS_SYNTHETIC_HPP
