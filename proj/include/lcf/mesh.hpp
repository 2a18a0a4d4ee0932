#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "lcf/shape_functions.hpp"

namespace lcf {

using NodeId = std::int64_t;
using ElementId = std::int64_t;

struct Node {
  NodeId id = 0;
  Point3 coords = Point3::Zero();
  Point3 displacement = Point3::Zero();
};

struct Element {
  ElementId id = 0;
  ElementKind kind = ElementKind::Hex20;
  std::vector<NodeId> node_ids;
};

/// Nodal data of one element gathered in local node order.
struct ElementData {
  ElementId id = 0;
  ElementKind kind = ElementKind::Hex20;
  NodalMatrix coords;
  NodalMatrix displacements;

  /// Diagonal of the nodal bounding box.
  double characteristic_length() const;
};

/// Immutable FEA output: nodes with displacements and element connectivity.
class Mesh {
 public:
  /// Validates ids, connectivity and finiteness; throws lcf::Error on failure.
  Mesh(std::vector<Node> nodes, std::vector<Element> elements);

  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Element> elements() const { return elements_; }

  std::size_t node_index(NodeId id) const;
  std::span<const std::size_t> element_node_indices(std::size_t element_index) const;
  ElementData element_data(std::size_t element_index) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> connectivity_;
  std::unordered_map<NodeId, std::size_t> node_lookup_;
};

struct BoundaryFace {
  std::size_t element_index = 0;
  ElementId element_id = 0;
  ElementKind kind = ElementKind::Hex20;
  std::size_t local_face = 0;  // 0-based

  const FaceChart& chart() const { return face_chart(kind, local_face); }
};

/// Faces whose corner-node set occurs in exactly one element, sorted by
/// (element id, local face).
std::vector<BoundaryFace> extract_boundary_faces(const Mesh& mesh);

/// Degeneracy threshold on det(grad Upsilon) for an element.
double degeneracy_tolerance(const ElementData& element);

Point3 geometric_transform(const ElementData& element, const Point3& xi);

/// Throws DegenerateElementError when det <= degeneracy_tolerance(element).
Eigen::Matrix3d transform_jacobian(const ElementData& element, const Point3& xi);

/// sqrt(det(D gamma^T D gamma)) of the composed chart s -> Upsilon(chart(s)).
double face_chart_gram(const ElementData& element, std::size_t local_face, double s1, double s2);

}  // namespace lcf
