// SPDX-License-Identifier: Apache-2.0

#include "irs/phase_control.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "irs/parallel.hpp"

namespace irs {

std::string_view to_string(ControlScheme scheme)
{
    switch (scheme) {
    case ControlScheme::ElementContinuous: return "element-continuous";
    case ControlScheme::ElementBinary: return "element-binary";
    case ControlScheme::ColumnContinuous: return "column-continuous";
    case ControlScheme::ColumnBinary: return "column-binary";
    }
    return "unknown";
}

std::optional<ControlScheme> parse_scheme(std::string_view name)
{
    for (ControlScheme s : kAllSchemes) {
        if (to_string(s) == name)
            return s;
    }
    return std::nullopt;
}

PhaseVector optimal_continuous(const ChannelSet& ch)
{
    if (ch.g.size() != ch.h_r_conj.size())
        throw std::invalid_argument("channel vectors g and h_r_conj differ in length");

    const double zeta = std::arg(ch.h_d_conj);
    PhaseVector pv;
    pv.theta.reserve(ch.size());
    for (std::size_t n = 0; n < ch.size(); ++n) {
        const double phi = std::arg(ch.h_r_conj[n]);
        const double psi = std::arg(ch.g[n]);
        pv.theta.push_back(wrap_phase(zeta - (phi + psi)));
    }
    return pv;
}

ReflectionConfig binarize(const PhaseVector& pv, ControlScheme scheme)
{
    if (!is_binary(scheme))
        throw std::invalid_argument("binarize requires a binary control scheme");

    ReflectionConfig rc;
    rc.scheme = scheme;
    rc.coeffs.reserve(pv.size());
    for (double theta : pv.theta)
        rc.coeffs.emplace_back(std::cos(theta) >= 0.0 ? 1.0 : -1.0, 0.0);
    return rc;
}

PhaseVector column_group(const PhaseVector& pv, const IrsGeometry& geom)
{
    if (pv.size() != geom.size())
        throw std::invalid_argument("phase vector length does not match the IRS element count");

    PhaseVector out;
    out.theta.resize(pv.size());
    for (std::size_t n = 0; n < pv.size(); ++n)
        out.theta[n] = pv.theta[geom.top_of_column(geom.column_of(n))];
    return out;
}

ReflectionConfig to_coefficients(const PhaseVector& pv, ControlScheme scheme)
{
    ReflectionConfig rc;
    rc.scheme = scheme;
    rc.coeffs.reserve(pv.size());
    for (double theta : pv.theta)
        rc.coeffs.push_back(std::polar(1.0, theta));
    return rc;
}

ReflectionConfig configure(const ChannelSet& ch, const IrsGeometry& geom, ControlScheme scheme)
{
    if (ch.g.size() != geom.size() || ch.h_r_conj.size() != geom.size())
        throw std::invalid_argument("channel set does not match the IRS element count");

    const PhaseVector theta = optimal_continuous(ch);
    switch (scheme) {
    case ControlScheme::ElementContinuous: return to_coefficients(theta, scheme);
    case ControlScheme::ElementBinary: return binarize(theta, scheme);
    case ControlScheme::ColumnContinuous: return to_coefficients(column_group(theta, geom), scheme);
    case ControlScheme::ColumnBinary: return binarize(column_group(theta, geom), scheme);
    }
    throw std::invalid_argument("unknown control scheme");
}

ColumnAggregate column_aggregate(const ChannelSet& ch, const IrsGeometry& geom)
{
    if (ch.g.size() != geom.size() || ch.h_r_conj.size() != geom.size())
        throw std::invalid_argument("channel set does not match the IRS element count");

    ColumnAggregate agg;
    agg.c.assign(geom.n_cols(), Complex{});
    for (std::size_t n = 0; n < geom.size(); ++n)
        agg.c[geom.column_of(n)] += ch.h_r_conj[n] * ch.g[n];
    return agg;
}

ReflectionConfig expand_column_signs(const std::vector<int>& signs, const IrsGeometry& geom)
{
    if (signs.size() != geom.n_cols())
        throw std::invalid_argument("sign vector length does not match the column count");

    ReflectionConfig rc;
    rc.scheme = ControlScheme::ColumnBinary;
    rc.coeffs.reserve(geom.size());
    for (std::size_t n = 0; n < geom.size(); ++n)
        rc.coeffs.emplace_back(signs[geom.column_of(n)] < 0 ? -1.0 : 1.0, 0.0);
    return rc;
}

std::vector<int> column_signs(const ReflectionConfig& rc, const IrsGeometry& geom)
{
    if (rc.size() != geom.size())
        throw std::invalid_argument("reflection config does not match the IRS element count");

    std::vector<int> signs(geom.n_cols());
    for (std::size_t k = 0; k < geom.n_cols(); ++k) {
        const Complex top = rc.coeffs[geom.top_of_column(k)];
        if (top != Complex{1.0, 0.0} && top != Complex{-1.0, 0.0})
            throw std::invalid_argument("configuration is not binary");
        signs[k] = top.real() > 0.0 ? 1 : -1;
    }
    for (std::size_t n = 0; n < geom.size(); ++n) {
        if (rc.coeffs[n] != Complex{static_cast<double>(signs[geom.column_of(n)]), 0.0})
            throw std::invalid_argument("configuration is not column-constant");
    }
    return signs;
}

double column_objective(const ColumnAggregate& agg, Complex h_d_conj,
                        const std::vector<int>& signs)
{
    if (signs.size() != agg.c.size())
        throw std::invalid_argument("sign vector length does not match the column count");
    Complex sum = h_d_conj;
    for (std::size_t k = 0; k < signs.size(); ++k)
        sum += signs[k] < 0 ? -agg.c[k] : agg.c[k];
    return std::norm(sum);
}

namespace {

// Sum of +/- c over `count` columns starting at `first`; bit (count - 1 - i) of `mask` set means
// column first + i takes -1, so increasing masks follow lexicographic sign order.
std::vector<Complex> partial_sums(const std::vector<Complex>& c, std::size_t first,
                                  std::size_t count, Complex offset)
{
    const std::size_t n_masks = std::size_t{1} << count;
    std::vector<Complex> table(n_masks);
    for (std::size_t mask = 0; mask < n_masks; ++mask) {
        Complex sum = offset;
        for (std::size_t i = 0; i < count; ++i) {
            const bool negative = (mask >> (count - 1 - i)) & 1u;
            sum += negative ? -c[first + i] : c[first + i];
        }
        table[mask] = sum;
    }
    return table;
}

struct Best {
    double power = -1.0;
    std::uint64_t mask = 0;
};

} // namespace

ColumnSearchResult exhaustive_column_binary(const ChannelSet& ch, const IrsGeometry& geom,
                                            std::size_t cap)
{
    const std::size_t n_cols = geom.n_cols();
    if (n_cols > cap || n_cols >= 63) {
        throw SearchCapacityError(
            "exhaustive column search over 2^" + std::to_string(n_cols) +
            " sign vectors exceeds the cap of 2^" + std::to_string(cap) +
            "; use coordinate_ascent_column_binary instead");
    }

    const ColumnAggregate agg = column_aggregate(ch, geom);

    // Split the sign vector into a leading (high) and trailing (low) half and combine
    // precomputed partial sums.
    const std::size_t n_high = n_cols / 2;
    const std::size_t n_low = n_cols - n_high;
    const auto high = partial_sums(agg.c, 0, n_high, ch.h_d_conj);
    const auto low = partial_sums(agg.c, n_high, n_low, Complex{});

    const std::size_t workers = std::min(default_worker_count(), high.size());
    std::vector<Best> per_worker(workers);
    const std::size_t chunk = (high.size() + workers - 1) / workers;
    parallel_for(workers, workers, [&](std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w) {
            Best best;
            const std::size_t h_end = std::min(high.size(), (w + 1) * chunk);
            for (std::size_t h = w * chunk; h < h_end; ++h) {
                for (std::size_t l = 0; l < low.size(); ++l) {
                    const double power = std::norm(high[h] + low[l]);
                    if (power > best.power) {
                        best.power = power;
                        best.mask = (static_cast<std::uint64_t>(h) << n_low) | l;
                    }
                }
            }
            per_worker[w] = best;
        }
    });

    // Workers cover increasing mask ranges, so keeping the first strict maximum reproduces the
    // sequential tie-break.
    Best best;
    for (const Best& b : per_worker) {
        if (b.power > best.power)
            best = b;
    }

    ColumnSearchResult result;
    result.signs.resize(n_cols);
    for (std::size_t k = 0; k < n_cols; ++k)
        result.signs[k] = ((best.mask >> (n_cols - 1 - k)) & 1u) ? -1 : 1;
    result.config = expand_column_signs(result.signs, geom);
    result.gain_power = column_objective(agg, ch.h_d_conj, result.signs);
    return result;
}

ColumnSearchResult coordinate_ascent_column_binary(const ChannelSet& ch, const IrsGeometry& geom,
                                                   const ReflectionConfig& init,
                                                   std::size_t max_sweeps)
{
    const ColumnAggregate agg = column_aggregate(ch, geom);

    ColumnSearchResult result;
    result.signs = column_signs(init, geom);

    Complex sum = ch.h_d_conj;
    for (std::size_t k = 0; k < agg.c.size(); ++k)
        sum += result.signs[k] < 0 ? -agg.c[k] : agg.c[k];
    double power = std::norm(sum);
    result.trace.push_back(power);

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        ++result.sweeps;
        bool changed = false;
        for (std::size_t k = 0; k < agg.c.size(); ++k) {
            // Flipping s_k moves the sum by -2 s_k c_k.
            const Complex flipped = sum - 2.0 * static_cast<double>(result.signs[k]) * agg.c[k];
            const double candidate = std::norm(flipped);
            if (candidate > power) {
                result.signs[k] = -result.signs[k];
                sum = flipped;
                power = candidate;
                result.trace.push_back(power);
                changed = true;
            }
        }
        if (!changed)
            break;
    }

    result.config = expand_column_signs(result.signs, geom);
    result.gain_power = column_objective(agg, ch.h_d_conj, result.signs);
    return result;
}

} // namespace irs
