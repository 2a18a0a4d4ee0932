#include "lcf/shape_functions.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lcf/error.hpp"

namespace lcf {
namespace {

// Reference nodes of the 20-node brick on [0,1]^3.
constexpr std::array<std::array<double, 3>, 20> kHexNodes = {{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
    {0.5, 0, 0}, {1, 0.5, 0}, {0.5, 1, 0}, {0, 0.5, 0},
    {0.5, 0, 1}, {1, 0.5, 1}, {0.5, 1, 1}, {0, 0.5, 1},
    {0, 0, 0.5}, {1, 0, 0.5}, {1, 1, 0.5}, {0, 1, 0.5},
}};

constexpr std::array<std::array<double, 3>, 10> kTetNodes = {{
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
    {0.5, 0, 0}, {0.5, 0.5, 0}, {0, 0.5, 0},
    {0, 0, 0.5}, {0.5, 0, 0.5}, {0, 0.5, 0.5},
}};

// Mid-edge node -> the two corners (barycentric indices) it connects.
constexpr std::array<std::array<int, 2>, 6> kTetEdges = {{
    {0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3},
}};

void check_inside(ElementKind kind, const Point3& xi) {
  if (!inside_reference_cell(kind, xi)) {
    throw DomainError("reference point (" + std::to_string(xi.x()) + ", " +
                      std::to_string(xi.y()) + ", " + std::to_string(xi.z()) +
                      ") outside the " + std::string(kind_name(kind)) + " reference cell");
  }
}

// Serendipity brick, evaluated in the symmetric coordinates r = 2 xi - 1.
void hex20(const Point3& xi, ShapeValues* values, ShapeGradients* grads) {
  const double r[3] = {2 * xi.x() - 1, 2 * xi.y() - 1, 2 * xi.z() - 1};
  for (std::size_t k = 0; k < 20; ++k) {
    double c[3];
    for (int d = 0; d < 3; ++d) c[d] = 2 * kHexNodes[k][d] - 1;
    if (k < 8) {
      const double f0 = 1 + r[0] * c[0], f1 = 1 + r[1] * c[1], f2 = 1 + r[2] * c[2];
      const double s = r[0] * c[0] + r[1] * c[1] + r[2] * c[2] - 2;
      if (values) (*values)(k) = 0.125 * f0 * f1 * f2 * s;
      if (grads) {
        // d/dxi = 2 d/dr
        (*grads)(k, 0) = 0.25 * c[0] * f1 * f2 * (s + f0);
        (*grads)(k, 1) = 0.25 * c[1] * f0 * f2 * (s + f1);
        (*grads)(k, 2) = 0.25 * c[2] * f0 * f1 * (s + f2);
      }
    } else {
      int axis = 0;
      while (c[axis] != 0) ++axis;
      const int a = (axis + 1) % 3, b = (axis + 2) % 3;
      const double q = 1 - r[axis] * r[axis];
      const double fa = 1 + r[a] * c[a], fb = 1 + r[b] * c[b];
      if (values) (*values)(k) = 0.25 * q * fa * fb;
      if (grads) {
        (*grads)(k, axis) = 0.5 * (-2 * r[axis]) * fa * fb;
        (*grads)(k, a) = 0.5 * q * c[a] * fb;
        (*grads)(k, b) = 0.5 * q * fa * c[b];
      }
    }
  }
}

void tet10(const Point3& xi, ShapeValues* values, ShapeGradients* grads) {
  const double bary[4] = {1 - xi.x() - xi.y() - xi.z(), xi.x(), xi.y(), xi.z()};
  const double dbary[4][3] = {{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 4; ++k) {
    if (values) (*values)(k) = bary[k] * (2 * bary[k] - 1);
    if (grads)
      for (int d = 0; d < 3; ++d) (*grads)(k, d) = (4 * bary[k] - 1) * dbary[k][d];
  }
  for (int e = 0; e < 6; ++e) {
    const int i = kTetEdges[e][0], j = kTetEdges[e][1];
    if (values) (*values)(4 + e) = 4 * bary[i] * bary[j];
    if (grads)
      for (int d = 0; d < 3; ++d)
        (*grads)(4 + e, d) = 4 * (dbary[i][d] * bary[j] + bary[i] * dbary[j][d]);
  }
}

std::vector<FaceChart> make_charts(ElementKind kind) {
  const Point3 e1 = Point3::UnitX(), e2 = Point3::UnitY(), e3 = Point3::UnitZ();
  const Point3 zero = Point3::Zero();
  if (kind == ElementKind::Hex20) {
    const auto q = FaceShape::Quadrilateral;
    return {
        {zero, e2, e3, q}, {e1, e2, e3, q},
        {zero, e1, e3, q}, {e2, e1, e3, q},
        {zero, e1, e2, q}, {e3, e1, e2, q},
    };
  }
  const auto t = FaceShape::Triangle;
  return {
      {zero, e2, e3, t},
      {zero, e1, e3, t},
      {zero, e1, e2, t},
      {e3, Point3(1, 0, -1), Point3(0, 1, -1), t},
  };
}

// Corners whose reference coordinates satisfy the face's plane equation.
std::vector<std::vector<std::size_t>> make_face_corners(ElementKind kind) {
  const auto charts = make_charts(kind);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& chart : charts) {
    const Point3 normal = chart.t1.cross(chart.t2);
    std::vector<std::size_t> corners;
    for (std::size_t k = 0; k < corner_count(kind); ++k) {
      if (std::abs(normal.dot(reference_node(kind, k) - chart.origin)) < 1e-14)
        corners.push_back(k);
    }
    out.push_back(std::move(corners));
  }
  return out;
}

}  // namespace

std::size_t node_count(ElementKind kind) { return kind == ElementKind::Hex20 ? 20 : 10; }
std::size_t corner_count(ElementKind kind) { return kind == ElementKind::Hex20 ? 8 : 4; }
std::size_t face_count(ElementKind kind) { return kind == ElementKind::Hex20 ? 6 : 4; }

FaceShape face_shape(ElementKind kind) {
  return kind == ElementKind::Hex20 ? FaceShape::Quadrilateral : FaceShape::Triangle;
}

std::string_view kind_name(ElementKind kind) {
  return kind == ElementKind::Hex20 ? "HEX20" : "TET10";
}

Point3 reference_node(ElementKind kind, std::size_t i) {
  if (i >= node_count(kind)) throw DomainError("reference node index out of range");
  const auto& n = kind == ElementKind::Hex20 ? kHexNodes[i] : kTetNodes[i];
  return {n[0], n[1], n[2]};
}

bool inside_reference_cell(ElementKind kind, const Point3& xi, double tol) {
  if (!xi.allFinite()) return false;
  if ((xi.array() < -tol).any()) return false;
  if (kind == ElementKind::Hex20) return !(xi.array() > 1 + tol).any();
  return xi.sum() <= 1 + tol;
}

ShapeValues shape_functions(ElementKind kind, const Point3& xi) {
  check_inside(kind, xi);
  ShapeValues values(node_count(kind));
  if (kind == ElementKind::Hex20)
    hex20(xi, &values, nullptr);
  else
    tet10(xi, &values, nullptr);
  return values;
}

ShapeGradients shape_gradients(ElementKind kind, const Point3& xi) {
  check_inside(kind, xi);
  ShapeGradients grads = ShapeGradients::Zero(node_count(kind), 3);
  if (kind == ElementKind::Hex20)
    hex20(xi, nullptr, &grads);
  else
    tet10(xi, nullptr, &grads);
  return grads;
}

const FaceChart& face_chart(ElementKind kind, std::size_t local_face) {
  static const std::vector<FaceChart> hex = make_charts(ElementKind::Hex20);
  static const std::vector<FaceChart> tet = make_charts(ElementKind::Tet10);
  const auto& charts = kind == ElementKind::Hex20 ? hex : tet;
  if (local_face >= charts.size()) throw DomainError("local face index out of range");
  return charts[local_face];
}

std::span<const std::size_t> face_corner_nodes(ElementKind kind, std::size_t local_face) {
  static const auto hex = make_face_corners(ElementKind::Hex20);
  static const auto tet = make_face_corners(ElementKind::Tet10);
  const auto& faces = kind == ElementKind::Hex20 ? hex : tet;
  if (local_face >= faces.size()) throw DomainError("local face index out of range");
  return faces[local_face];
}

}  // namespace lcf
