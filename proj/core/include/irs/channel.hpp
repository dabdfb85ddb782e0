// SPDX-License-Identifier: Apache-2.0
//
// Deterministic line-of-sight gains for the AP -> element, element -> UE and AP -> UE links.

#ifndef IRS_CHANNEL_HPP
#define IRS_CHANNEL_HPP

#include <complex>
#include <vector>

#include "irs/geometry.hpp"

namespace irs {

using Complex = std::complex<double>;

struct ChannelParams {
    double wavelength_m = 0.0;
    double path_loss_exponent = 2.0;
    double ref_distance_m = 1.0;

    void validate() const;
};

ChannelParams channel_params(const ScenarioConfig& cfg);

/// Wraps an angle into [0, 2*pi).
double wrap_phase(double radians);

/// LOS gain a * exp(-j 2 pi d / lambda) with generalized Friis amplitude
///   a = lambda / (4 pi d0) * (d0 / max(d, d0))^(alpha / 2).
/// Distances below d0 are clamped to d0. The returned phase lies in [0, 2*pi).
/// Throws std::invalid_argument for coincident endpoints.
Complex los_gain(const Point3& tx, const Point3& rx, const ChannelParams& params);

/// Per-term factors of the received-signal sum.
///
/// g[n] is the AP -> element n gain, h_r_conj[n] the conjugated element n -> UE gain and
/// h_d_conj the conjugated direct AP -> UE gain.
struct ChannelSet {
    std::vector<Complex> g;
    std::vector<Complex> h_r_conj;
    Complex h_d_conj{0.0, 0.0};

    std::size_t size() const { return g.size(); }
};

ChannelSet compute_channels(const IrsGeometry& geom, const Point3& ap, const Point3& ue,
                            const ChannelParams& params);

} // namespace irs

#endif // IRS_CHANNEL_HPP
