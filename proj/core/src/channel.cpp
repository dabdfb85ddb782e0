// SPDX-License-Identifier: Apache-2.0

#include "irs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irs {

void ChannelParams::validate() const
{
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
        throw std::invalid_argument("wavelength must be positive");
    if (!(path_loss_exponent >= 0.0) || !std::isfinite(path_loss_exponent))
        throw std::invalid_argument("path loss exponent must be >= 0");
    if (!(ref_distance_m > 0.0) || !std::isfinite(ref_distance_m))
        throw std::invalid_argument("reference distance must be positive");
}

ChannelParams channel_params(const ScenarioConfig& cfg)
{
    return {cfg.wavelength(), cfg.path_loss_exponent, cfg.ref_distance_m};
}

double wrap_phase(double radians)
{
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi) // fmod + 2pi can round up to exactly 2pi
        r = 0.0;
    return r;
}

Complex los_gain(const Point3& tx, const Point3& rx, const ChannelParams& params)
{
    const double d = distance(tx, rx);
    if (!(d > 0.0))
        throw std::invalid_argument("LOS gain undefined for coincident endpoints");

    const double d0 = params.ref_distance_m;
    const double amplitude = params.wavelength_m / (4.0 * kPi * d0) *
                             std::pow(d0 / std::max(d, d0), 0.5 * params.path_loss_exponent);

    // Reduce by whole wavelengths before scaling so that d and d + lambda give the same phase.
    const double cycles = d / params.wavelength_m;
    const double frac = cycles - std::floor(cycles);
    return std::polar(amplitude, wrap_phase(-kTwoPi * frac));
}

ChannelSet compute_channels(const IrsGeometry& geom, const Point3& ap, const Point3& ue,
                            const ChannelParams& params)
{
    params.validate();
    ChannelSet ch;
    ch.g.reserve(geom.size());
    ch.h_r_conj.reserve(geom.size());
    for (const Point3& element : geom.elements()) {
        ch.g.push_back(los_gain(ap, element, params));
        ch.h_r_conj.push_back(std::conj(los_gain(element, ue, params)));
    }
    ch.h_d_conj = std::conj(los_gain(ap, ue, params));
    return ch;
}

} // namespace irs
