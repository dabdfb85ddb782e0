// SPDX-License-Identifier: Apache-2.0

#include "irs/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irs {

double distance(const Point3& a, const Point3& b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double horizontal_distance(const Point3& a, const Point3& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

IrsGeometry::IrsGeometry(std::size_t n_cols, std::size_t n_rows, double spacing, Point3 center)
    : n_cols_(n_cols), n_rows_(n_rows), spacing_(spacing), center_(center)
{
    if (n_cols == 0 || n_rows == 0)
        throw std::invalid_argument("IRS array dimensions must be at least 1x1");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("IRS element spacing must be positive and finite");

    const double col_mid = 0.5 * static_cast<double>(n_cols - 1);
    const double row_mid = 0.5 * static_cast<double>(n_rows - 1);
    positions_.reserve(n_cols * n_rows);
    for (std::size_t row = 0; row < n_rows; ++row) {
        for (std::size_t col = 0; col < n_cols; ++col) {
            positions_.push_back({center.x + (static_cast<double>(col) - col_mid) * spacing,
                                  center.y,
                                  center.z + (row_mid - static_cast<double>(row)) * spacing});
        }
    }
}

IrsGeometry build_irs_array(std::size_t n_cols, std::size_t n_rows, double frequency_hz,
                            const Point3& center)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("carrier frequency must be positive");
    const double spacing = 0.5 * kSpeedOfLight / frequency_hz;
    return IrsGeometry(n_cols, n_rows, spacing, center);
}

IrsGeometry build_irs_array(const ScenarioConfig& cfg)
{
    return build_irs_array(cfg.array_cols, cfg.array_rows, cfg.frequency_hz, cfg.irs_center);
}

void ScenarioConfig::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("invalid scenario: ") + what);
    };
    auto finite = [](const Point3& p) {
        return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
    };
    require(finite(ap_pos), "AP position must be finite");
    require(finite(irs_center), "IRS center must be finite");
    require(std::isfinite(ue_height), "UE height must be finite");
    require(std::isfinite(map_bounds.x_min) && std::isfinite(map_bounds.x_max) &&
                std::isfinite(map_bounds.y_min) && std::isfinite(map_bounds.y_max),
            "map bounds must be finite");
    require(frequency_hz > 0.0 && std::isfinite(frequency_hz), "frequency must be > 0");
    require(tx_power_w > 0.0 && std::isfinite(tx_power_w), "transmit power must be > 0");
    require(noise_power_w > 0.0 && std::isfinite(noise_power_w), "noise power must be > 0");
    require(path_loss_exponent >= 0.0 && std::isfinite(path_loss_exponent),
            "path loss exponent must be >= 0");
    require(ref_distance_m > 0.0 && std::isfinite(ref_distance_m),
            "reference distance must be > 0");
    require(grid_step_m > 0.0 && std::isfinite(grid_step_m), "grid step must be > 0");
    require(array_cols >= 1 && array_rows >= 1, "array dimensions must be >= 1");
}

ScenarioConfig scenario_preset(int id)
{
    double ap_z = 0.0;
    double irs_z = 0.0;
    switch (id) {
    case 1: ap_z = 1.5; irs_z = 1.5; break;
    case 2: ap_z = 2.5; irs_z = 2.0; break;
    case 3: ap_z = 5.0; irs_z = 2.5; break;
    default:
        throw std::invalid_argument("unknown scenario id " + std::to_string(id) +
                                    " (expected 1, 2 or 3)");
    }

    ScenarioConfig cfg;
    cfg.id = id;
    cfg.ap_pos = {4.0, 15.0, ap_z};
    cfg.irs_center = {10.0, 20.0, irs_z};
    cfg.ue_height = 1.5;
    cfg.map_bounds = {0.0, 20.0, 0.0, 20.0};
    cfg.frequency_hz = 26e9;
    cfg.tx_power_w = 0.05;
    cfg.noise_power_w = 1e-9; // -60 dBm
    cfg.path_loss_exponent = 2.0;
    cfg.ref_distance_m = 1.0;
    cfg.grid_step_m = 0.5;
    cfg.array_cols = 32;
    cfg.array_rows = 32;
    return cfg;
}

bool is_excluded(const ScenarioConfig& cfg, const Point3& ue)
{
    return horizontal_distance(ue, cfg.ap_pos) < cfg.ref_distance_m ||
           horizontal_distance(ue, cfg.irs_center) < cfg.ref_distance_m;
}

namespace {

std::size_t axis_count(double lo, double hi, double step)
{
    if (hi < lo)
        return 0;
    // Tolerate rounding so that an exact multiple of step includes the upper bound.
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

} // namespace

std::vector<Point3> ue_grid(const ScenarioConfig& cfg)
{
    cfg.validate();
    const auto& b = cfg.map_bounds;
    const std::size_t nx = axis_count(b.x_min, b.x_max, cfg.grid_step_m);
    const std::size_t ny = axis_count(b.y_min, b.y_max, cfg.grid_step_m);

    std::vector<Point3> grid;
    grid.reserve(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double y = b.y_min + static_cast<double>(iy) * cfg.grid_step_m;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const Point3 p{b.x_min + static_cast<double>(ix) * cfg.grid_step_m, y, cfg.ue_height};
            if (!is_excluded(cfg, p))
                grid.push_back(p);
        }
    }
    return grid;
}

} // namespace irs
