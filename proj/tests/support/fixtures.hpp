#pragma once

#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lcf/calibration.hpp"
#include "lcf/material.hpp"
#include "lcf/mesh.hpp"

namespace lcf::testing {

using PointMap = std::function<Point3(const Point3&)>;

/// Mesh of nx*ny*nz Hex20 (or 6*nx*ny*nz Tet10) cells on the unit cube,
/// pushed through `geometry`; nodal displacements are `displacement(x)`.
Mesh box_mesh(ElementKind kind, int nx, int ny, int nz, const PointMap& geometry,
              const PointMap& displacement);

/// Single element whose nodes are geometry(reference node).
ElementData single_element(ElementKind kind, const PointMap& geometry, const PointMap& displacement);
Mesh single_element_mesh(ElementKind kind, const PointMap& geometry, const PointMap& displacement);

PointMap identity_map();
PointMap zero_field();
/// u = strain * x for a constant (not necessarily symmetric) matrix.
PointMap linear_field(const Eigen::Matrix3d& gradient);

/// Affine map plus a smooth quadratic bend of size `bend`; nodes of a Hex20
/// built from it are strictly valid for bend below about 0.15.
PointMap distorted_map(std::mt19937_64& rng, double bend);

/// Quadrant of an annulus (bore radius r0, rim r1, thickness t) with
/// nr * nt * nz Hex20 cells.
struct DiskGeometry {
  double r0 = 10;
  double r1 = 20;
  double thickness = 4;
  double angle = 1.5707963267948966;
};
Mesh disk_sector_mesh(const DiskGeometry& g, int nr, int nt, int nz, const PointMap& displacement);

/// Displacement field with a Gaussian strain concentration of half-width `width`
/// centred at `center`, amplitude `amp` (length units).
PointMap gaussian_bump(const Point3& center, double width, double amp);

/// Steel-like parameter set (MPa).
MaterialParams steel();

/// Weibull samples with scale specimen_eta(record, truth) at each strain level.
std::vector<SpecimenRecord> synthetic_specimens(const MaterialParams& truth,
                                                const std::vector<double>& strain_levels,
                                                int count, double gauge_area, std::uint64_t seed);

/// Fresh empty directory under the system temporary directory.
std::filesystem::path scratch_dir(const std::string& name);

std::string read_file(const std::filesystem::path& path);

}  // namespace lcf::testing
