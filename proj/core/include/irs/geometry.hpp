// SPDX-License-Identifier: Apache-2.0
//
// Positions, IRS element lattice, deployment presets and the UE evaluation grid.

#ifndef IRS_GEOMETRY_HPP
#define IRS_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace irs {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A position in meters.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

double distance(const Point3& a, const Point3& b);
double horizontal_distance(const Point3& a, const Point3& b);

/// Planar IRS lattice mounted in the plane y = center.y.
///
/// Elements are stored row-major with row 0 at the top of every column:
/// element index n = row * n_cols + col. Columns run along z, rows along x.
class IrsGeometry {
public:
    IrsGeometry(std::size_t n_cols, std::size_t n_rows, double spacing, Point3 center);

    std::size_t n_cols() const { return n_cols_; }
    std::size_t n_rows() const { return n_rows_; }
    std::size_t size() const { return positions_.size(); }
    double spacing() const { return spacing_; }
    const Point3& center() const { return center_; }

    double width() const { return static_cast<double>(n_cols_) * spacing_; }
    double height() const { return static_cast<double>(n_rows_) * spacing_; }

    const Point3& element(std::size_t n) const { return positions_.at(n); }
    std::span<const Point3> elements() const { return positions_; }

    std::size_t index(std::size_t row, std::size_t col) const { return row * n_cols_ + col; }
    std::size_t column_of(std::size_t n) const { return n % n_cols_; }
    std::size_t row_of(std::size_t n) const { return n / n_cols_; }
    /// Index of the topmost element (row 0) of column `col`.
    std::size_t top_of_column(std::size_t col) const { return index(0, col); }

private:
    std::size_t n_cols_;
    std::size_t n_rows_;
    double spacing_;
    Point3 center_;
    std::vector<Point3> positions_;
};

/// Half-wavelength lattice of n_cols x n_rows elements centered on `center`.
/// Throws std::invalid_argument on zero dimensions or a non-positive frequency.
IrsGeometry build_irs_array(std::size_t n_cols, std::size_t n_rows, double frequency_hz,
                            const Point3& center);

struct MapBounds {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    friend bool operator==(const MapBounds&, const MapBounds&) = default;
};

struct ScenarioConfig {
    int id = 0; ///< preset id, 0 for custom configurations
    Point3 ap_pos;
    Point3 irs_center;
    double ue_height = 0.0;
    MapBounds map_bounds;
    double frequency_hz = 0.0;
    double tx_power_w = 0.0;
    double noise_power_w = 0.0;
    double path_loss_exponent = 0.0;
    double ref_distance_m = 0.0;
    double grid_step_m = 0.0;
    std::size_t array_cols = 32;
    std::size_t array_rows = 32;

    double wavelength() const { return kSpeedOfLight / frequency_hz; }

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// The three deployment geometries (1: equal heights, 2: close heights, 3: elevated AP).
ScenarioConfig scenario_preset(int id);

/// IRS lattice described by the scenario (array dims, frequency, IRS center).
IrsGeometry build_irs_array(const ScenarioConfig& cfg);

/// True when `ue` lies strictly within one reference distance (horizontally) of the AP or
/// of the IRS center.
bool is_excluded(const ScenarioConfig& cfg, const Point3& ue);

/// Regular UE grid over the map at grid_step, row-major (y outer, x inner), z = ue_height,
/// with excluded points removed.
std::vector<Point3> ue_grid(const ScenarioConfig& cfg);

} // namespace irs

#endif // IRS_GEOMETRY_HPP
