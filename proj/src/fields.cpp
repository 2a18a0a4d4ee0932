#include "lcf/fields.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "lcf/error.hpp"

namespace lcf {

void ElasticConstants::validate() const {
  if (!(youngs_modulus > 0) || !std::isfinite(youngs_modulus))
    throw DomainError("Young's modulus must be positive");
  if (!(poisson_ratio > -1 && poisson_ratio < 0.5))
    throw DomainError("Poisson ratio must lie in (-1, 0.5)");
}

double ElasticConstants::lame_lambda() const {
  return youngs_modulus * poisson_ratio / ((1 + poisson_ratio) * (1 - 2 * poisson_ratio));
}

double ElasticConstants::lame_mu() const { return youngs_modulus / (2 * (1 + poisson_ratio)); }

Eigen::Matrix3d SymmetricTensor::matrix() const {
  Eigen::Matrix3d m;
  m << c[0], c[5], c[4],
       c[5], c[1], c[3],
       c[4], c[3], c[2];
  return m;
}

SymmetricTensor SymmetricTensor::symmetric_part(const Eigen::Matrix3d& m) {
  return {{m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(1, 2) + m(2, 1)), 0.5 * (m(0, 2) + m(2, 0)),
           0.5 * (m(0, 1) + m(1, 0))}};
}

Point3 displacement_at(const ElementData& element, const Point3& xi) {
  const ShapeValues psi = shape_functions(element.kind, xi);
  return element.displacements.transpose() * psi;
}

Eigen::Matrix3d displacement_gradient(const ElementData& element, const Point3& xi) {
  const ShapeGradients grads = shape_gradients(element.kind, xi);
  const Eigen::Matrix3d jac = element.coords.transpose() * grads;
  const double det = jac.determinant();
  if (!(det > degeneracy_tolerance(element)))
    throw DegenerateElementError(element.id, "element " + std::to_string(element.id) +
                                                 " has a singular geometric Jacobian");
  const Eigen::Matrix3d ref_grad = element.displacements.transpose() * grads;
  return ref_grad * jac.inverse();
}

StrainTensor strain_at(const ElementData& element, const Point3& xi) {
  return {SymmetricTensor::symmetric_part(displacement_gradient(element, xi))};
}

StressTensor stress_from_strain(const StrainTensor& strain, const ElasticConstants& constants) {
  const double lambda = constants.lame_lambda();
  const double two_mu = 2 * constants.lame_mu();
  const double volumetric = lambda * strain.trace();
  StressTensor s;
  for (int i = 0; i < 3; ++i) s.c[i] = volumetric + two_mu * strain.c[i];
  for (int i = 3; i < 6; ++i) s.c[i] = two_mu * strain.c[i];
  return s;
}

double von_mises(const SymmetricTensor& s) {
  const double d01 = s.xx() - s.yy();
  const double d12 = s.yy() - s.zz();
  const double d20 = s.zz() - s.xx();
  const double shear = s.yz() * s.yz() + s.xz() * s.xz() + s.xy() * s.xy();
  return std::sqrt(0.5 * (d01 * d01 + d12 * d12 + d20 * d20) + 3 * shear);
}

}  // namespace lcf
