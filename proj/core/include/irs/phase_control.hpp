// SPDX-License-Identifier: Apache-2.0
//
// Reflection coefficients for the four IRS control regimes, plus exact and iterative
// optimizers over column-constant binary configurations.

#ifndef IRS_PHASE_CONTROL_HPP
#define IRS_PHASE_CONTROL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irs/channel.hpp"
#include "irs/geometry.hpp"

namespace irs {

enum class ControlScheme {
    ElementContinuous,
    ElementBinary,
    ColumnContinuous,
    ColumnBinary,
};

inline constexpr std::array<ControlScheme, 4> kAllSchemes = {
    ControlScheme::ElementContinuous,
    ControlScheme::ElementBinary,
    ControlScheme::ColumnContinuous,
    ControlScheme::ColumnBinary,
};

/// Kebab-case name, e.g. "column-binary".
std::string_view to_string(ControlScheme scheme);
std::optional<ControlScheme> parse_scheme(std::string_view name);

inline bool is_binary(ControlScheme s)
{
    return s == ControlScheme::ElementBinary || s == ControlScheme::ColumnBinary;
}
inline bool is_column_wise(ControlScheme s)
{
    return s == ControlScheme::ColumnContinuous || s == ControlScheme::ColumnBinary;
}

/// Per-element phase shifts in [0, 2*pi).
struct PhaseVector {
    std::vector<double> theta;

    std::size_t size() const { return theta.size(); }
};

/// Unit-modulus reflection coefficient per element. beta is the (fixed) reflection amplitude.
struct ReflectionConfig {
    std::vector<Complex> coeffs;
    ControlScheme scheme = ControlScheme::ElementContinuous;
    double beta = 1.0;

    std::size_t size() const { return coeffs.size(); }
};

/// c[k] = sum over elements n of column k of h_r_conj[n] * g[n].
struct ColumnAggregate {
    std::vector<Complex> c;
};

/// Co-phasing solution theta_n = mod(zeta - (phi_n + psi_n), 2*pi), where phi_n and psi_n are
/// the phases of h_r_conj[n] and g[n] and zeta the phase of h_d_conj.
PhaseVector optimal_continuous(const ChannelSet& ch);

/// 1-bit quantization: +1 when cos(theta) >= 0, otherwise -1.
/// `scheme` must be ElementBinary or ColumnBinary.
ReflectionConfig binarize(const PhaseVector& pv, ControlScheme scheme);

/// Replicates the phase of each column's topmost element down the column.
PhaseVector column_group(const PhaseVector& pv, const IrsGeometry& geom);

/// Continuous coefficients exp(j theta) tagged with `scheme`.
ReflectionConfig to_coefficients(const PhaseVector& pv, ControlScheme scheme);

/// Reflection configuration for `scheme`. Column-binary groups first, then quantizes.
ReflectionConfig configure(const ChannelSet& ch, const IrsGeometry& geom, ControlScheme scheme);

ColumnAggregate column_aggregate(const ChannelSet& ch, const IrsGeometry& geom);

/// Column sign vector (+1 / -1 per column) expanded to one coefficient per element.
ReflectionConfig expand_column_signs(const std::vector<int>& signs, const IrsGeometry& geom);

/// Column signs of a column-constant +/-1 configuration, read from each column's top element.
/// Throws std::invalid_argument if the configuration is not column-constant binary.
std::vector<int> column_signs(const ReflectionConfig& rc, const IrsGeometry& geom);

/// |sum_k s_k c_k + h_d_conj|^2.
double column_objective(const ColumnAggregate& agg, Complex h_d_conj,
                        const std::vector<int>& signs);

inline constexpr std::size_t kDefaultExhaustiveCap = 24;
inline constexpr std::size_t kDefaultAscentSweeps = 50;

/// Raised when a 2^N_x enumeration exceeds the configured cap.
class SearchCapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct ColumnSearchResult {
    ReflectionConfig config;
    std::vector<int> signs;
    /// |effective gain|^2 reached by `config`; SNR = P_t * gain_power / noise power.
    double gain_power = 0.0;
    /// Objective after every accepted move (coordinate ascent only), starting with the initial
    /// configuration.
    std::vector<double> trace;
    std::size_t sweeps = 0;
};

/// Exact maximization of |sum_k s_k c_k + h_d_conj|^2 over s in {+1,-1}^N_x. Ties resolve to
/// the lexicographically smallest sign vector with +1 ordered before -1.
/// Throws SearchCapacityError when N_x > cap.
ColumnSearchResult exhaustive_column_binary(const ChannelSet& ch, const IrsGeometry& geom,
                                            std::size_t cap = kDefaultExhaustiveCap);

/// Single-column sign flips in column order 0..N_x-1, accepting only strict improvements,
/// until a sweep makes no change or `max_sweeps` sweeps have run.
/// `init` must be column-constant +/-1.
ColumnSearchResult coordinate_ascent_column_binary(const ChannelSet& ch, const IrsGeometry& geom,
                                                   const ReflectionConfig& init,
                                                   std::size_t max_sweeps = kDefaultAscentSweeps);

} // namespace irs

#endif // IRS_PHASE_CONTROL_HPP
