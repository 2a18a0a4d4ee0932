#include "lcf/mesh.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include <Eigen/LU>

#include "lcf/error.hpp"

namespace lcf {

double ElementData::characteristic_length() const {
  const Point3 lo = coords.colwise().minCoeff().transpose();
  const Point3 hi = coords.colwise().maxCoeff().transpose();
  return (hi - lo).norm();
}

Mesh::Mesh(std::vector<Node> nodes, std::vector<Element> elements)
    : nodes_(std::move(nodes)), elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("mesh has no elements");
  node_lookup_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (!n.coords.allFinite() || !n.displacement.allFinite())
      throw Error("node " + std::to_string(n.id) + " has non-finite data");
    if (!node_lookup_.emplace(n.id, i).second)
      throw Error("duplicate node id " + std::to_string(n.id));
  }
  std::unordered_map<ElementId, bool> seen;
  connectivity_.reserve(elements_.size());
  for (const Element& e : elements_) {
    if (!seen.emplace(e.id, true).second)
      throw Error("duplicate element id " + std::to_string(e.id));
    if (e.node_ids.size() != node_count(e.kind))
      throw Error("element " + std::to_string(e.id) + " has " +
                  std::to_string(e.node_ids.size()) + " nodes, expected " +
                  std::to_string(node_count(e.kind)));
    std::vector<std::size_t> idx;
    idx.reserve(e.node_ids.size());
    for (NodeId id : e.node_ids) {
      auto it = node_lookup_.find(id);
      if (it == node_lookup_.end())
        throw Error("element " + std::to_string(e.id) + " references unknown node " +
                    std::to_string(id));
      idx.push_back(it->second);
    }
    connectivity_.push_back(std::move(idx));
  }
}

std::size_t Mesh::node_index(NodeId id) const {
  auto it = node_lookup_.find(id);
  if (it == node_lookup_.end()) throw Error("unknown node id " + std::to_string(id));
  return it->second;
}

std::span<const std::size_t> Mesh::element_node_indices(std::size_t element_index) const {
  return connectivity_.at(element_index);
}

ElementData Mesh::element_data(std::size_t element_index) const {
  const Element& e = elements_.at(element_index);
  const auto& idx = connectivity_[element_index];
  ElementData data;
  data.id = e.id;
  data.kind = e.kind;
  data.coords.resize(idx.size(), 3);
  data.displacements.resize(idx.size(), 3);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    data.coords.row(k) = nodes_[idx[k]].coords.transpose();
    data.displacements.row(k) = nodes_[idx[k]].displacement.transpose();
  }
  return data;
}

std::vector<BoundaryFace> extract_boundary_faces(const Mesh& mesh) {
  // Key: sorted corner node ids, padded with a sentinel for triangles.
  using Key = std::array<std::size_t, 4>;
  struct Entry {
    int count = 0;
    std::size_t element_index = 0;
    std::size_t local_face = 0;
  };
  std::map<Key, Entry> occurrences;
  const auto elements = mesh.elements();
  for (std::size_t ei = 0; ei < elements.size(); ++ei) {
    const ElementKind kind = elements[ei].kind;
    const auto nodes = mesh.element_node_indices(ei);
    for (std::size_t f = 0; f < face_count(kind); ++f) {
      Key key;
      key.fill(static_cast<std::size_t>(-1));
      const auto corners = face_corner_nodes(kind, f);
      for (std::size_t c = 0; c < corners.size(); ++c) key[c] = nodes[corners[c]];
      std::sort(key.begin(), key.end());
      Entry& entry = occurrences[key];
      if (entry.count++ == 0) {
        entry.element_index = ei;
        entry.local_face = f;
      }
    }
  }
  std::vector<BoundaryFace> faces;
  for (const auto& [key, entry] : occurrences) {
    if (entry.count != 1) continue;
    const Element& e = elements[entry.element_index];
    faces.push_back({entry.element_index, e.id, e.kind, entry.local_face});
  }
  std::sort(faces.begin(), faces.end(), [](const BoundaryFace& a, const BoundaryFace& b) {
    return a.element_id != b.element_id ? a.element_id < b.element_id
                                        : a.local_face < b.local_face;
  });
  return faces;
}

double degeneracy_tolerance(const ElementData& element) {
  const double h = element.characteristic_length();
  return 1e-12 * h * h * h;
}

Point3 geometric_transform(const ElementData& element, const Point3& xi) {
  const ShapeValues psi = shape_functions(element.kind, xi);
  Point3 x = Point3::Zero();
  for (Eigen::Index k = 0; k < psi.size(); ++k) x += psi(k) * element.coords.row(k).transpose();
  return x;
}

Eigen::Matrix3d transform_jacobian(const ElementData& element, const Point3& xi) {
  const ShapeGradients grads = shape_gradients(element.kind, xi);
  const Eigen::Matrix3d jac = element.coords.transpose() * grads;
  const double det = jac.determinant();
  if (!(det > degeneracy_tolerance(element)))
    throw DegenerateElementError(element.id, "element " + std::to_string(element.id) +
                                                 " is degenerate (det J = " +
                                                 std::to_string(det) + ")");
  return jac;
}

double face_chart_gram(const ElementData& element, std::size_t local_face, double s1, double s2) {
  const FaceChart& chart = face_chart(element.kind, local_face);
  const bool in_square = s1 >= -1e-12 && s2 >= -1e-12 && s1 <= 1 + 1e-12 && s2 <= 1 + 1e-12;
  const bool in_map_area =
      chart.shape == FaceShape::Quadrilateral ? in_square : in_square && s1 + s2 <= 1 + 1e-12;
  if (!in_map_area) throw DomainError("chart parameter outside the face's map area");
  const ShapeGradients grads = shape_gradients(element.kind, chart(s1, s2));
  const Eigen::Matrix3d jac = element.coords.transpose() * grads;
  const Point3 a = jac * chart.t1;
  const Point3 b = jac * chart.t2;
  const double root_g = a.cross(b).norm();
  const double h = element.characteristic_length();
  if (!(root_g > 1e-12 * h * h))
    throw DegenerateElementError(element.id, "face " + std::to_string(local_face + 1) +
                                                 " of element " + std::to_string(element.id) +
                                                 " is degenerate");
  return root_g;
}

}  // namespace lcf
