#include "fixtures.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "lcf/shape_functions.hpp"

namespace lcf::testing {
namespace {

using Lattice = std::array<int, 3>;

struct LatticeBuilder {
  int nx, ny, nz;
  std::map<Lattice, NodeId> ids;
  std::vector<Element> elements;

  NodeId id_of(const Lattice& l) {
    auto [it, inserted] = ids.emplace(l, static_cast<NodeId>(ids.size() + 1));
    return it->second;
  }

  Mesh build(const PointMap& geometry, const PointMap& displacement) const {
    std::vector<Node> nodes(ids.size());
    for (const auto& [l, id] : ids) {
      const Point3 xi(l[0] / (2.0 * nx), l[1] / (2.0 * ny), l[2] / (2.0 * nz));
      Node& n = nodes[id - 1];
      n.id = id;
      n.coords = geometry(xi);
      n.displacement = displacement(n.coords);
    }
    return Mesh(std::move(nodes), elements);
  }
};

Lattice lattice_at(const Lattice& origin, const std::array<Lattice, 4>& corners, const Point3& xi) {
  // corners are relative to origin in doubled units; xi barycentric-style
  Lattice out{};
  for (int d = 0; d < 3; ++d) {
    const double v = corners[0][d] + xi.x() * (corners[1][d] - corners[0][d]) +
                     xi.y() * (corners[2][d] - corners[0][d]) +
                     xi.z() * (corners[3][d] - corners[0][d]);
    out[d] = origin[d] + static_cast<int>(std::lround(v));
  }
  return out;
}

}  // namespace

Mesh box_mesh(ElementKind kind, int nx, int ny, int nz, const PointMap& geometry,
              const PointMap& displacement) {
  LatticeBuilder b{nx, ny, nz, {}, {}};
  ElementId next = 1;
  for (int c = 0; c < nz; ++c)
    for (int bj = 0; bj < ny; ++bj)
      for (int a = 0; a < nx; ++a) {
        const Lattice origin{2 * a, 2 * bj, 2 * c};
        if (kind == ElementKind::Hex20) {
          Element e{next++, kind, {}};
          for (std::size_t l = 0; l < 20; ++l) {
            const Point3 xi = reference_node(kind, l);
            e.node_ids.push_back(b.id_of({origin[0] + static_cast<int>(std::lround(2 * xi.x())),
                                          origin[1] + static_cast<int>(std::lround(2 * xi.y())),
                                          origin[2] + static_cast<int>(std::lround(2 * xi.z()))}));
          }
          b.elements.push_back(std::move(e));
          continue;
        }
        // Kuhn split along the main diagonal.
        std::array<int, 3> perm{0, 1, 2};
        do {
          std::array<Lattice, 4> v{};
          v[0] = {0, 0, 0};
          v[1] = v[0];
          v[1][perm[0]] = 2;
          v[2] = v[1];
          v[2][perm[1]] = 2;
          v[3] = {2, 2, 2};
          Eigen::Matrix3d m;
          for (int k = 0; k < 3; ++k)
            for (int d = 0; d < 3; ++d) m(d, k) = v[k + 1][d] - v[0][d];
          if (m.determinant() < 0) std::swap(v[1], v[2]);
          Element e{next++, kind, {}};
          for (std::size_t l = 0; l < 10; ++l)
            e.node_ids.push_back(b.id_of(lattice_at(origin, v, reference_node(kind, l))));
          b.elements.push_back(std::move(e));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  return b.build(geometry, displacement);
}

ElementData single_element(ElementKind kind, const PointMap& geometry, const PointMap& displacement) {
  ElementData e;
  e.id = 1;
  e.kind = kind;
  const std::size_t n = node_count(kind);
  e.coords.resize(static_cast<Eigen::Index>(n), 3);
  e.displacements.resize(static_cast<Eigen::Index>(n), 3);
  for (std::size_t k = 0; k < n; ++k) {
    const Point3 x = geometry(reference_node(kind, k));
    e.coords.row(static_cast<Eigen::Index>(k)) = x.transpose();
    e.displacements.row(static_cast<Eigen::Index>(k)) = displacement(x).transpose();
  }
  return e;
}

Mesh single_element_mesh(ElementKind kind, const PointMap& geometry, const PointMap& displacement) {
  std::vector<Node> nodes;
  Element e{1, kind, {}};
  for (std::size_t k = 0; k < node_count(kind); ++k) {
    Node n;
    n.id = static_cast<NodeId>(k + 1);
    n.coords = geometry(reference_node(kind, k));
    n.displacement = displacement(n.coords);
    nodes.push_back(n);
    e.node_ids.push_back(n.id);
  }
  return Mesh(std::move(nodes), {e});
}

PointMap identity_map() {
  return [](const Point3& x) { return x; };
}

PointMap zero_field() {
  return [](const Point3&) { return Point3::Zero().eval(); };
}

PointMap linear_field(const Eigen::Matrix3d& gradient) {
  return [gradient](const Point3& x) { return (gradient * x).eval(); };
}

PointMap distorted_map(std::mt19937_64& rng, double bend) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) += 0.2 * u(rng);
  const double scale = 0.5 + 1.5 * (u(rng) + 1) / 2;
  a *= scale;
  Point3 shift(u(rng), u(rng), u(rng));
  std::array<Eigen::Matrix3d, 3> q;
  for (auto& m : q) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
    m = 0.5 * (m + m.transpose()).eval();
  }
  return [a, shift, q, bend, scale](const Point3& xi) {
    Point3 x = a * xi + shift;
    for (int d = 0; d < 3; ++d) x[d] += bend * scale * xi.dot(q[d] * xi);
    return x;
  };
}

Mesh disk_sector_mesh(const DiskGeometry& g, int nr, int nt, int nz, const PointMap& displacement) {
  auto geometry = [g](const Point3& s) {
    const double r = g.r0 + s.x() * (g.r1 - g.r0);
    const double theta = s.y() * g.angle;
    return Point3(r * std::cos(theta), r * std::sin(theta), s.z() * g.thickness);
  };
  return box_mesh(ElementKind::Hex20, nr, nt, nz, geometry, displacement);
}

PointMap gaussian_bump(const Point3& center, double width, double amp) {
  return [center, width, amp](const Point3& x) {
    const double g = amp * std::exp(-(x - center).squaredNorm() / (width * width));
    return Point3(g, 0.5 * g, 0.0);
  };
}

MaterialParams steel() {
  MaterialParams p;
  p.youngs_modulus = 200000;
  p.poisson_ratio = 0.3;
  p.hardening_coefficient = 1200;
  p.hardening_exponent = 0.12;
  p.fatigue_strength = 900;
  p.strength_exponent = -0.09;
  p.fatigue_ductility = 0.3;
  p.ductility_exponent = -0.6;
  p.weibull_shape = 6;
  return p;
}

std::vector<SpecimenRecord> synthetic_specimens(const MaterialParams& truth,
                                                const std::vector<double>& strain_levels,
                                                int count, double gauge_area, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SpecimenRecord> out;
  const int levels = static_cast<int>(strain_levels.size());
  for (int i = 0; i < count; ++i) {
    SpecimenRecord r{1, strain_levels[static_cast<std::size_t>(i % levels)], gauge_area};
    const double eta = specimen_eta(r, truth);
    std::weibull_distribution<double> w(truth.weibull_shape, eta);
    r.cycles = w(rng);
    out.push_back(r);
  }
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("lcf_" + name + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lcf::testing
