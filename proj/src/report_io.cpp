#include "lcf/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <Eigen/QR>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lcf/error.hpp"
#include "lcf/material_io.hpp"

namespace lcf {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

double parse_number(const std::string& text, const std::string& source, std::size_t line) {
  double v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(source, line, "invalid number '" + text + "'");
  return v;
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::vector<double> CycleGrid::cycles(double eta) const {
  if (count < 1) throw DomainError("cycle grid needs at least one point");
  if (!(start >= 0) || !(stop >= start)) throw DomainError("cycle grid needs 0 <= start <= stop");
  if (logarithmic && !(start > 0)) throw DomainError("logarithmic cycle grid needs start > 0");
  const double scale = relative_to_eta ? eta : 1.0;
  if (!std::isfinite(scale)) return {};
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const double v = logarithmic ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                 : start + t * (stop - start);
    out.push_back(v * scale);
  }
  return out;
}

void write_pof_csv(const std::filesystem::path& path, const std::vector<double>& cycles, double eta,
                   double m) {
  auto out = open_out(path);
  out << "n,pof\n";
  for (double n : cycles) fmt::print(out, "{:.17g},{:.17g}\n", n, pof(n, eta, m));
}

void write_faces_csv(const std::filesystem::path& path, std::span<const FaceContribution> faces,
                     double m) {
  auto out = open_out(path);
  out << "element_id,face,area,hazard,density,eta_face\n";
  for (const auto& f : faces)
    fmt::print(out, "{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n", f.element_id, f.local_face + 1, f.area,
               f.hazard, f.density(), f.eta(m));
}

std::vector<std::size_t> face_corner_cycle(ElementKind kind, std::size_t local_face) {
  const FaceChart& chart = face_chart(kind, local_face);
  const auto corners = face_corner_nodes(kind, local_face);
  Eigen::Matrix<double, 3, 2> basis;
  basis << chart.t1, chart.t2;
  std::vector<std::pair<double, std::size_t>> angles;
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  std::vector<Eigen::Vector2d> params;
  for (std::size_t c : corners) {
    const Eigen::Vector2d s =
        basis.colPivHouseholderQr().solve(reference_node(kind, c) - chart.origin);
    params.push_back(s);
    centroid += s;
  }
  centroid /= static_cast<double>(corners.size());
  for (std::size_t i = 0; i < corners.size(); ++i)
    angles.emplace_back(std::atan2(params[i].y() - centroid.y(), params[i].x() - centroid.x()),
                        corners[i]);
  std::sort(angles.begin(), angles.end());
  std::vector<std::size_t> out;
  for (const auto& a : angles) out.push_back(a.second);
  return out;
}

void write_density_vtk(const std::filesystem::path& path, const Mesh& mesh,
                       std::span<const BoundaryFace> faces,
                       std::span<const FaceContribution> contributions, double cycles, double m) {
  std::unordered_map<std::size_t, std::size_t> point_index;
  std::vector<std::size_t> point_nodes;
  std::vector<std::vector<std::size_t>> polygons;
  std::vector<const FaceContribution*> cell_data;

  // Contributions hold only non-skipped faces, in face order.
  std::size_t ci = 0;
  for (const BoundaryFace& face : faces) {
    if (ci >= contributions.size()) break;
    const FaceContribution& c = contributions[ci];
    if (c.element_id != face.element_id || c.local_face != face.local_face) continue;
    ++ci;
    const auto nodes = mesh.element_node_indices(face.element_index);
    std::vector<std::size_t> poly;
    for (std::size_t local : face_corner_cycle(face.kind, face.local_face)) {
      const std::size_t node = nodes[local];
      auto [it, inserted] = point_index.emplace(node, point_nodes.size());
      if (inserted) point_nodes.push_back(node);
      poly.push_back(it->second);
    }
    polygons.push_back(std::move(poly));
    cell_data.push_back(&c);
  }

  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n";
  out << "crack initiation density\n";
  out << "ASCII\n";
  out << "DATASET POLYDATA\n";
  fmt::print(out, "POINTS {} double\n", point_nodes.size());
  for (std::size_t node : point_nodes) {
    const Point3& x = mesh.nodes()[node].coords;
    fmt::print(out, "{:.17g} {:.17g} {:.17g}\n", x.x(), x.y(), x.z());
  }
  std::size_t size = 0;
  for (const auto& p : polygons) size += p.size() + 1;
  fmt::print(out, "POLYGONS {} {}\n", polygons.size(), size);
  for (const auto& p : polygons) {
    out << p.size();
    for (std::size_t i : p) out << ' ' << i;
    out << '\n';
  }
  fmt::print(out, "CELL_DATA {}\n", polygons.size());
  const double n_pow = std::pow(cycles, m);
  auto scalars = [&](const char* name, auto value) {
    fmt::print(out, "SCALARS {} double 1\nLOOKUP_TABLE default\n", name);
    for (const FaceContribution* c : cell_data) fmt::print(out, "{:.17g}\n", value(*c));
  };
  scalars("hazard_density", [](const FaceContribution& c) { return c.density(); });
  scalars("crack_density", [&](const FaceContribution& c) { return c.density() * n_pow; });
  scalars("eta_face", [&](const FaceContribution& c) { return c.eta(m); });
}

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& entries) {
  auto out = open_out(path);
  for (const auto& [k, v] : entries) out << k << " = " << v << '\n';
}

std::map<std::string, std::string> read_key_values(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_key_values(in, path.string());
}

std::size_t CsvTable::column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error("no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  const std::string source = path.string();
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (table.header.empty()) {
      table.header = split(line);
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != table.header.size())
      throw ParseError(source, line_no,
                       "expected " + std::to_string(table.header.size()) + " columns, got " +
                           std::to_string(cells.size()));
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_number(c, source, line_no));
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw ParseError(source, 0, "missing header row");
  return table;
}

VtkPolyData read_vtk_polydata(const std::filesystem::path& path) {
  auto in = open_in(path);
  const std::string source = path.string();
  VtkPolyData data;
  std::string token;
  // Header: three lines, then DATASET POLYDATA.
  std::string line;
  for (int i = 0; i < 3; ++i) std::getline(in, line);
  auto expect = [&](const std::string& word) {
    if (!(in >> token) || token != word) throw ParseError(source, 0, "expected '" + word + "'");
  };
  expect("DATASET");
  expect("POLYDATA");
  std::size_t count = 0, size = 0;
  while (in >> token) {
    if (token == "POINTS") {
      in >> count >> token;
      data.points.resize(count);
      for (auto& p : data.points) in >> p.x() >> p.y() >> p.z();
    } else if (token == "POLYGONS") {
      in >> count >> size;
      data.polygons.resize(count);
      for (auto& poly : data.polygons) {
        std::size_t n = 0;
        in >> n;
        poly.resize(n);
        for (auto& i : poly) in >> i;
      }
    } else if (token == "CELL_DATA") {
      in >> count;
    } else if (token == "SCALARS") {
      std::string name, type, components;
      in >> name >> type >> components;
      expect("LOOKUP_TABLE");
      in >> token;
      auto& values = data.cell_scalars[name];
      values.resize(data.polygons.size());
      for (auto& v : values) {
        in >> token;
        v = parse_number(token, source, 0);
      }
    } else {
      throw ParseError(source, 0, "unexpected token '" + token + "'");
    }
    if (!in) throw ParseError(source, 0, "truncated file");
  }
  return data;
}

}  // namespace lcf
