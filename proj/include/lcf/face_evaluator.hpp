#pragma once

#include <array>
#include <vector>

#include "lcf/fields.hpp"
#include "lcf/mesh.hpp"
#include "lcf/quadrature.hpp"
#include "lcf/simd/kernels.hpp"

namespace lcf {

/// Reference-cell data shared by every face with the same element kind,
/// local face index and rule: quadrature points mapped through the chart and
/// the shape gradients there (structure-of-arrays, (k*3 + j) * n + p).
struct FaceQuadrature {
  ElementKind kind = ElementKind::Hex20;
  std::size_t local_face = 0;
  PlaneRule rule;
  std::vector<Point3> reference_points;
  std::vector<double> gradients;

  std::size_t size() const { return rule.size(); }
};

FaceQuadrature make_face_quadrature(ElementKind kind, std::size_t local_face, int points_per_dim);

/// All (kind, face) tables for one points-per-dimension setting.
class FaceQuadratureSet {
 public:
  explicit FaceQuadratureSet(int points_per_dim);
  const FaceQuadrature& get(ElementKind kind, std::size_t local_face) const;
  int points_per_dim() const { return points_per_dim_; }

 private:
  int points_per_dim_;
  std::array<FaceQuadrature, 6> hex_;
  std::array<FaceQuadrature, 4> tet_;
};

/// Per-point fields on one face.
struct FacePointValues {
  std::vector<double> root_gram;
  std::vector<double> det_jacobian;
  std::vector<double> von_mises;
};

/// Batched evaluation of sqrt(g), det J and the elastic von Mises stress at
/// every quadrature point of a face.
FacePointValues evaluate_face_points(const ElementData& element, const FaceQuadrature& quad,
                                     const ElasticConstants& constants,
                                     const simd::KernelTable& kernels);

}  // namespace lcf
