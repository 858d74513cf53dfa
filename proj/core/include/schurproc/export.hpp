#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schurproc/asympt.hpp"
#include "schurproc/plane_partition.hpp"

namespace schurproc {

/// Rectangular (tau, chi) grid, inclusive of both endpoints.
struct GridSpec {
    double tau_min = -2.0;
    double tau_max = 2.0;
    int n_tau = 81;
    double chi_min = -2.0;
    double chi_max = 2.0;
    int n_chi = 81;

    double tau(int i) const;
    double chi(int j) const;
};

/// theta_star and rho sampled over a grid, row-major with chi fastest.
struct DensityGrid {
    GridSpec spec;
    std::vector<double> theta;
    std::vector<double> rho;

    double theta_at(int i, int j) const { return theta[index(i, j)]; }
    double rho_at(int i, int j) const { return rho[index(i, j)]; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.n_chi) +
               static_cast<std::size_t>(j);
    }
};

DensityGrid density_grid(const GridSpec& g);

/// Limit-shape points over a grid (degenerate values outside the bulk).
struct ShapeMesh {
    GridSpec spec;
    std::vector<ShapePoint> points;
};

ShapeMesh shape_mesh(const GridSpec& g, double tol = 1e-8);

using Polyline = std::vector<std::pair<double, double>>;  // (tau, chi)

/// Marching-squares iso-curves of theta_star at the given level, returned as
/// short segments in grid coordinates.
std::vector<Polyline> level_curves(const DensityGrid& g, double theta_level);

/// CSV bodies; `header` is echoed as a leading comment line.
std::string density_csv(const DensityGrid& g, const std::string& header);
std::string shape_csv(const ShapeMesh& m, const std::string& header);

/// Level sets theta_star = k pi/8, k = 1..7, as an SVG figure.
std::string density_svg(const DensityGrid& g, const std::string& header);

/// Rhombus tiling of the plane partition surface in the (t, h) projection,
/// faces colored by orientation; columns and the floor drawn for indices up
/// to `bound`.
std::string tiling_svg(const PlanePartition& pi, int bound,
                       const std::string& header);

}  // namespace schurproc
