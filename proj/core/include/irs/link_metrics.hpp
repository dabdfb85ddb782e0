// SPDX-License-Identifier: Apache-2.0
//
// Effective channel gain, received SNR and SNR gain over the direct-path-only baseline.

#ifndef IRS_LINK_METRICS_HPP
#define IRS_LINK_METRICS_HPP

#include <stdexcept>

#include "irs/channel.hpp"
#include "irs/phase_control.hpp"

namespace irs {

struct LinkParams {
    double tx_power_w = 0.0;
    double noise_power_w = 0.0;

    void validate() const;
};

LinkParams link_params(const ScenarioConfig& cfg);

/// Thrown when the SNR gain is requested with a zero direct path.
class UndefinedBaselineError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// sum_n h_r_conj[n] * beta * coeffs[n] * g[n] + h_d_conj.
Complex effective_gain(const ChannelSet& ch, const ReflectionConfig& rc);

/// 10 log10(P_t |gain|^2 / noise). A zero gain yields -infinity.
double snr_db(Complex gain, const LinkParams& lp);

/// SNR with the IRS configured minus SNR over the direct path alone, i.e.
/// 20 log10(|effective| / |h_d_conj|). Independent of P_t and the noise power.
double snr_gain_db(const ChannelSet& ch, const ReflectionConfig& rc, const LinkParams& lp);

} // namespace irs

#endif // IRS_LINK_METRICS_HPP
