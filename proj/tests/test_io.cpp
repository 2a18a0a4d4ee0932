#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "lcf/calibration.hpp"
#include "lcf/error.hpp"
#include "lcf/mesh_io.hpp"
#include "lcf/report_io.hpp"

using namespace lcf;
using namespace lcf::testing;

namespace {

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_mesh(in, "t.mesh");
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

const char* kTet = R"(# one tetrahedron
NODES
1 0 0 0
2 1 0 0
3 0 1 0
4 0 0 1
5 0.5 0 0
6 0.5 0.5 0
7 0 0.5 0
8 0 0 0.5
9 0.5 0 0.5
10 0 0.5 0.5
ELEMENTS
7 TET10 1 2 3 4 5 6 7 8 9 10
DISPLACEMENTS
2 0.001 0 0  # stretched corner
)";

}  // namespace

TEST_CASE("mesh text format") {
  std::istringstream in(kTet);
  const Mesh mesh = parse_mesh(in);
  CHECK(mesh.nodes().size() == 10);
  CHECK(mesh.elements()[0].id == 7);
  CHECK(mesh.elements()[0].kind == ElementKind::Tet10);
  CHECK(mesh.nodes()[1].displacement.x() == 0.001);
  CHECK(mesh.nodes()[2].displacement.norm() == 0);
}

TEST_CASE("mesh round trip is exact") {
  std::mt19937_64 rng(1);
  const Mesh a = box_mesh(ElementKind::Hex20, 2, 1, 1, distorted_map(rng, 0.05), gaussian_bump(Point3(0.5, 0.5, 0.5), 0.3, 1e-3));
  std::stringstream ss;
  write_mesh(ss, a);
  const Mesh b = parse_mesh(ss);
  REQUIRE(a.nodes().size() == b.nodes().size());
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    CHECK(a.nodes()[i].id == b.nodes()[i].id);
    CHECK(a.nodes()[i].coords == b.nodes()[i].coords);
    CHECK(a.nodes()[i].displacement == b.nodes()[i].displacement);
  }
  REQUIRE(a.elements().size() == b.elements().size());
  for (std::size_t i = 0; i < a.elements().size(); ++i) CHECK(a.elements()[i].node_ids == b.elements()[i].node_ids);
}

TEST_CASE("mesh parse errors carry line numbers") {
  const std::string base(kTet);
  CHECK(parse_error_line("1 0 0 0\n") == 1);
  CHECK(parse_error_line("NODES\n1 0 0\n") == 2);
  CHECK(parse_error_line("NODES\n1 0 0 x\n") == 2);
  CHECK(parse_error_line("NODES\n1 0 0 0 5\n") == 2);
  CHECK(parse_error_line(base + "99 1 2 3\n") == 17);
  std::string bad_kind = base;
  bad_kind.replace(bad_kind.find("TET10"), 5, "WEDGE");
  CHECK(parse_error_line(bad_kind) == 14);
  std::string short_elem = base;
  short_elem.replace(short_elem.find(" 10\nDISP"), 3, "");
  CHECK(parse_error_line(short_elem) == 14);
  std::string unknown = base;
  unknown.replace(unknown.find("7 TET10 1"), 9, "7 TET10 11");
  CHECK(parse_error_line(unknown) == 0);
  CHECK_THROWS_AS(read_mesh("/nonexistent/file.mesh"), ParseError);
}

TEST_CASE("key-value, CSV and specimen files round trip") {
  const auto dir = scratch_dir("io");
  write_key_values(dir / "kv.txt", {{"eta", format_double(1234.5678901234567)}, {"note", "two words"}});
  const auto kv = read_key_values(dir / "kv.txt");
  CHECK(std::stod(kv.at("eta")) == 1234.5678901234567);
  CHECK(kv.at("note") == "two words");

  std::vector<SpecimenRecord> recs{{123.5, 4e-3, 12.5}, {1e5 / 3, 1e-3 / 7, 2}};
  write_specimens(dir / "spec.csv", recs);
  const auto back = read_specimens(dir / "spec.csv");
  REQUIRE(back.size() == 2);
  CHECK(back[1].cycles == recs[1].cycles);
  CHECK(back[1].strain_amplitude == recs[1].strain_amplitude);

  std::ofstream(dir / "bad.csv") << "n_cycles,strain_amplitude,gauge_area\n1,2\n";
  try {
    read_csv(dir / "bad.csv");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::ofstream(dir / "neg.csv") << "n_cycles,strain_amplitude,gauge_area\n-1,0.01,1\n";
  CHECK_THROWS_AS(read_specimens(dir / "neg.csv"), ParseError);
  std::ofstream(dir / "hdr.csv") << "cycles,eps,area\n1,0.01,1\n";
  CHECK_THROWS_AS(read_specimens(dir / "hdr.csv"), ParseError);
}

TEST_CASE("cycle grids") {
  CycleGrid g;
  const auto c = g.cycles(1000);
  REQUIRE(c.size() == 200);
  CHECK(c.front() == doctest::Approx(0.1));
  CHECK(c.back() == doctest::Approx(10000));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] > c[i - 1]);
  CHECK(g.cycles(std::numeric_limits<double>::infinity()).empty());
  CycleGrid lin{0, 100, 5, false, false};
  CHECK(lin.cycles(7) == std::vector<double>{0, 25, 50, 75, 100});
  CHECK_THROWS_AS((CycleGrid{0, 1, 10, true, true}.cycles(1)), DomainError);
  CHECK_THROWS_AS((CycleGrid{1, 10, 0, true, true}.cycles(1)), DomainError);
}

TEST_CASE("face corner cycles are polygon orderings") {
  for (ElementKind kind : {ElementKind::Hex20, ElementKind::Tet10}) {
    for (std::size_t f = 0; f < face_count(kind); ++f) {
      const auto cyc = face_corner_cycle(kind, f);
      // consecutive corners share an edge of the face: polygon area equals face area
      Point3 normal = Point3::Zero();
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Point3 a = reference_node(kind, cyc[i]);
        const Point3 b = reference_node(kind, cyc[(i + 1) % cyc.size()]);
        normal += a.cross(b);
      }
      const double area = 0.5 * normal.norm();
      const double expected = kind == ElementKind::Hex20 ? 1.0 : (f == 3 ? std::sqrt(3.0) / 2 : 0.5);
      CHECK(area == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("report files re-parse") {
  const auto dir = scratch_dir("reports");
  const Mesh mesh = box_mesh(ElementKind::Hex20, 2, 1, 1, identity_map(), gaussian_bump(Point3(0.2, 0.5, 0.5), 0.4, 3e-3));
  const auto faces = extract_boundary_faces(mesh);
  const MaterialParams p = steel();
  const ReliabilityResult r = analyze_reliability(mesh, faces, p);
  write_faces_csv(dir / "faces.csv", r.hazard.faces, p.weibull_shape);
  write_pof_csv(dir / "pof.csv", CycleGrid{}.cycles(r.eta), r.eta, p.weibull_shape);
  write_density_vtk(dir / "d.vtk", mesh, faces, r.hazard.faces, 1e-3 * r.eta, p.weibull_shape);

  const CsvTable fc = read_csv(dir / "faces.csv");
  CHECK(fc.header == std::vector<std::string>{"element_id", "face", "area", "hazard", "density", "eta_face"});
  REQUIRE(fc.rows.size() == r.hazard.faces.size());
  for (std::size_t i = 0; i < fc.rows.size(); ++i) {
    CHECK(fc.rows[i][fc.column("hazard")] == r.hazard.faces[i].hazard);
    CHECK(fc.rows[i][fc.column("face")] == static_cast<double>(r.hazard.faces[i].local_face + 1));
  }
  const CsvTable pc = read_csv(dir / "pof.csv");
  CHECK(pc.rows.size() == 200);
  for (const auto& row : pc.rows) CHECK(row[1] == pof(row[0], r.eta, p.weibull_shape));

  const VtkPolyData vtk = read_vtk_polydata(dir / "d.vtk");
  CHECK(vtk.polygons.size() == faces.size());
  CHECK(vtk.points.size() == 12);
  REQUIRE(vtk.cell_scalars.count("hazard_density"));
  for (std::size_t i = 0; i < faces.size(); ++i)
    CHECK(vtk.cell_scalars.at("hazard_density")[i] == r.hazard.faces[i].density());
}
