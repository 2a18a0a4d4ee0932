#include "lcf/face_evaluator.hpp"

#include "lcf/error.hpp"

namespace lcf {

FaceQuadrature make_face_quadrature(ElementKind kind, std::size_t local_face, int points_per_dim) {
  FaceQuadrature quad;
  quad.kind = kind;
  quad.local_face = local_face;
  const FaceChart& chart = face_chart(kind, local_face);
  quad.rule = face_rule(chart.shape, points_per_dim);
  const std::size_t n = quad.rule.size();
  const std::size_t n_nodes = node_count(kind);
  quad.gradients.assign(n_nodes * 3 * n, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    const Point3 xi = chart(quad.rule.points[p][0], quad.rule.points[p][1]);
    quad.reference_points.push_back(xi);
    const ShapeGradients g = shape_gradients(kind, xi);
    for (std::size_t k = 0; k < n_nodes; ++k)
      for (std::size_t j = 0; j < 3; ++j) quad.gradients[(k * 3 + j) * n + p] = g(k, j);
  }
  return quad;
}

FaceQuadratureSet::FaceQuadratureSet(int points_per_dim) : points_per_dim_(points_per_dim) {
  for (std::size_t f = 0; f < hex_.size(); ++f)
    hex_[f] = make_face_quadrature(ElementKind::Hex20, f, points_per_dim);
  for (std::size_t f = 0; f < tet_.size(); ++f)
    tet_[f] = make_face_quadrature(ElementKind::Tet10, f, points_per_dim);
}

const FaceQuadrature& FaceQuadratureSet::get(ElementKind kind, std::size_t local_face) const {
  if (kind == ElementKind::Hex20) return hex_.at(local_face);
  return tet_.at(local_face);
}

FacePointValues evaluate_face_points(const ElementData& element, const FaceQuadrature& quad,
                                     const ElasticConstants& constants,
                                     const simd::KernelTable& kernels) {
  const std::size_t n = quad.size();
  const std::size_t n_nodes = node_count(element.kind);
  // Row-major nodal arrays, k*3 + i.
  double coords[kMaxNodes * 3];
  double disp[kMaxNodes * 3];
  for (std::size_t k = 0; k < n_nodes; ++k)
    for (std::size_t i = 0; i < 3; ++i) {
      coords[k * 3 + i] = element.coords(k, i);
      disp[k * 3 + i] = element.displacements(k, i);
    }
  std::vector<double> jac(9 * n), ref_grad(9 * n), strain(6 * n);
  kernels.contract_gradients(coords, n_nodes, quad.gradients.data(), n, jac.data());
  kernels.contract_gradients(disp, n_nodes, quad.gradients.data(), n, ref_grad.data());

  FacePointValues values;
  values.root_gram.resize(n);
  values.det_jacobian.resize(n);
  values.von_mises.resize(n);
  const FaceChart& chart = face_chart(element.kind, quad.local_face);
  kernels.chart_gram(jac.data(), chart.t1.data(), chart.t2.data(), n, values.root_gram.data());
  kernels.small_strain(ref_grad.data(), jac.data(), n, strain.data(), values.det_jacobian.data());
  kernels.von_mises_from_strain(strain.data(), constants.lame_lambda(), constants.lame_mu(), n,
                                values.von_mises.data());
  return values;
}

}  // namespace lcf
