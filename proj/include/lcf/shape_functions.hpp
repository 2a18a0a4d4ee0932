#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace lcf {

/// Quadratic solid elements. Node ordering follows the common commercial
/// convention: corners first, then mid-edge nodes (see docs/mesh_format.md).
enum class ElementKind { Hex20, Tet10 };

enum class FaceShape { Quadrilateral, Triangle };

inline constexpr std::size_t kMaxNodes = 20;

using Point3 = Eigen::Vector3d;
using ShapeValues = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxNodes, 1>;
using ShapeGradients = Eigen::Matrix<double, Eigen::Dynamic, 3, 0, kMaxNodes, 3>;
using NodalMatrix = Eigen::Matrix<double, Eigen::Dynamic, 3, 0, kMaxNodes, 3>;

std::size_t node_count(ElementKind kind);
std::size_t corner_count(ElementKind kind);
std::size_t face_count(ElementKind kind);
FaceShape face_shape(ElementKind kind);
std::string_view kind_name(ElementKind kind);

/// Reference-cell coordinates of node `i`. The brick is [0,1]^3, the
/// tetrahedron is the unit simplex.
Point3 reference_node(ElementKind kind, std::size_t i);

bool inside_reference_cell(ElementKind kind, const Point3& xi, double tol = 1e-12);

/// Throws DomainError if `xi` lies outside the reference cell.
ShapeValues shape_functions(ElementKind kind, const Point3& xi);

/// Row k holds the reference gradient of shape function k.
ShapeGradients shape_gradients(ElementKind kind, const Point3& xi);

/// Affine chart from the face's map area ([0,1]^2 or the unit triangle) into
/// the reference cell: xi = origin + s1 * t1 + s2 * t2.
struct FaceChart {
  Point3 origin;
  Point3 t1;
  Point3 t2;
  FaceShape shape;

  Point3 operator()(double s1, double s2) const { return origin + s1 * t1 + s2 * t2; }
};

/// Local faces are 0-based. Hex: 0,1 fix xi_1 = 0,1; 2,3 fix xi_2; 4,5 fix
/// xi_3. Tet: 0,1,2 fix xi_1,xi_2,xi_3 = 0; 3 is the slanted face.
const FaceChart& face_chart(ElementKind kind, std::size_t local_face);

/// Local indices of the corner nodes lying on a face, ascending.
std::span<const std::size_t> face_corner_nodes(ElementKind kind, std::size_t local_face);

}  // namespace lcf
