#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lcf/mesh.hpp"
#include "lcf/reliability.hpp"

namespace lcf {

/// Cycle grid for PoF curves, either in multiples of eta or in cycles.
struct CycleGrid {
  double start = 1e-4;
  double stop = 10;
  int count = 200;
  bool logarithmic = true;
  bool relative_to_eta = true;

  /// Throws DomainError if the grid is empty or ill-formed.
  std::vector<double> cycles(double eta) const;
};

void write_pof_csv(const std::filesystem::path& path, const std::vector<double>& cycles, double eta,
                   double m);

/// element_id,face,area,hazard,density,eta_face (face is 1-based).
void write_faces_csv(const std::filesystem::path& path, std::span<const FaceContribution> faces,
                     double m);

/// Legacy VTK polydata with one polygon (face corners) per boundary face and
/// cell scalars hazard_density, crack_density (at `cycles`) and eta_face.
void write_density_vtk(const std::filesystem::path& path, const Mesh& mesh,
                       std::span<const BoundaryFace> faces, std::span<const FaceContribution> contributions,
                       double cycles, double m);

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& entries);
std::map<std::string, std::string> read_key_values(const std::filesystem::path& path);

/// Numeric CSV with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
};
CsvTable read_csv(const std::filesystem::path& path);

struct VtkPolyData {
  std::vector<Point3> points;
  std::vector<std::vector<std::size_t>> polygons;
  std::map<std::string, std::vector<double>> cell_scalars;
};
VtkPolyData read_vtk_polydata(const std::filesystem::path& path);

/// Corner nodes of a face in cyclic order around its boundary.
std::vector<std::size_t> face_corner_cycle(ElementKind kind, std::size_t local_face);

std::string format_double(double v);

}  // namespace lcf
