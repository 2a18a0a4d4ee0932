#pragma once

#include <array>

#include <Eigen/Core>

#include "lcf/mesh.hpp"

namespace lcf {

/// Isotropic linear elasticity. Units are not checked: E must share the
/// stress unit used by the fatigue parameters.
struct ElasticConstants {
  double youngs_modulus = 0;
  double poisson_ratio = 0;

  void validate() const;
  double lame_lambda() const;
  double lame_mu() const;
};

/// Symmetric 3x3 tensor stored as (xx, yy, zz, yz, xz, xy).
struct SymmetricTensor {
  std::array<double, 6> c{};

  double xx() const { return c[0]; }
  double yy() const { return c[1]; }
  double zz() const { return c[2]; }
  double yz() const { return c[3]; }
  double xz() const { return c[4]; }
  double xy() const { return c[5]; }
  double trace() const { return c[0] + c[1] + c[2]; }

  Eigen::Matrix3d matrix() const;
  /// Symmetric part of `m`.
  static SymmetricTensor symmetric_part(const Eigen::Matrix3d& m);
};

struct StrainTensor : SymmetricTensor {};
struct StressTensor : SymmetricTensor {};

Point3 displacement_at(const ElementData& element, const Point3& xi);

/// Physical displacement gradient du_i/dx_j.
Eigen::Matrix3d displacement_gradient(const ElementData& element, const Point3& xi);

StrainTensor strain_at(const ElementData& element, const Point3& xi);

StressTensor stress_from_strain(const StrainTensor& strain, const ElasticConstants& constants);

/// Equivalent stress from the second deviatoric invariant, sqrt(3/2 s:s).
double von_mises(const SymmetricTensor& stress);

}  // namespace lcf
