// SPDX-License-Identifier: Apache-2.0

#include "irs/link_metrics.hpp"

#include <cmath>
#include <limits>

namespace irs {

void LinkParams::validate() const
{
    if (!(tx_power_w > 0.0) || !std::isfinite(tx_power_w))
        throw std::invalid_argument("transmit power must be positive");
    if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w))
        throw std::invalid_argument("noise power must be positive");
}

LinkParams link_params(const ScenarioConfig& cfg)
{
    return {cfg.tx_power_w, cfg.noise_power_w};
}

Complex effective_gain(const ChannelSet& ch, const ReflectionConfig& rc)
{
    if (ch.g.size() != ch.h_r_conj.size() || rc.size() != ch.size())
        throw std::invalid_argument("reflection config does not match the channel set");

    Complex cascade{};
    for (std::size_t n = 0; n < ch.size(); ++n)
        cascade += ch.h_r_conj[n] * rc.coeffs[n] * ch.g[n];
    return rc.beta * cascade + ch.h_d_conj;
}

double snr_db(Complex gain, const LinkParams& lp)
{
    lp.validate();
    const double power = std::norm(gain);
    if (power == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(lp.tx_power_w * power / lp.noise_power_w);
}

double snr_gain_db(const ChannelSet& ch, const ReflectionConfig& rc, const LinkParams& lp)
{
    lp.validate();
    const double baseline = std::abs(ch.h_d_conj);
    if (baseline == 0.0)
        throw UndefinedBaselineError("SNR gain undefined: direct path gain is zero");
    return 20.0 * std::log10(std::abs(effective_gain(ch, rc)) / baseline);
}

} // namespace irs
