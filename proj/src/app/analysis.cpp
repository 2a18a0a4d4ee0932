#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include "lcf/app.hpp"
#include "lcf/material_io.hpp"
#include "lcf/mesh_io.hpp"
#include "lcf/quadrature.hpp"
#include "lcf/reliability.hpp"
#include "lcf/simd/kernels.hpp"

namespace lcf::app {
namespace {

struct Inputs {
  Mesh mesh;
  MaterialParams params;
  std::vector<BoundaryFace> faces;
};

Inputs load_inputs(const RunConfig& config) {
  spdlog::info("reading mesh {}", config.mesh_path.string());
  Mesh mesh = read_mesh(config.mesh_path);
  spdlog::info("reading material {}", config.material_path.string());
  MaterialParams params = read_material(config.material_path);
  std::vector<BoundaryFace> faces = extract_boundary_faces(mesh);
  spdlog::info("{} nodes, {} elements, {} boundary faces", mesh.nodes().size(),
               mesh.elements().size(), faces.size());
  if (faces.empty()) spdlog::warn("mesh has no boundary faces; hazard is zero");
  return {std::move(mesh), params, std::move(faces)};
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  if (dynamic_cast<const ParseError*>(&e)) return kInput;
  return kNumerical;
}

void RunConfig::validate() const {
  if (points_per_dim < 1 || points_per_dim > kMaxPointsPerDim)
    throw UsageError("--lq must lie in 1..6");
  if (segments < 1) throw UsageError("--segments must be at least 1");
  if (!(report_nstar > 0)) throw UsageError("--nstar must be positive");
  if (!std::filesystem::exists(mesh_path))
    throw UsageError("mesh file not found: " + mesh_path.string());
  if (!std::filesystem::exists(material_path))
    throw UsageError("material file not found: " + material_path.string());
  try {
    grid.cycles(1.0);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid cycle grid: ") + e.what());
  }
}

AnalysisSummary run_analysis(const RunConfig& config) {
  config.validate();
  const Inputs in = load_inputs(config);
  prepare_out_dir(config.out_dir);

  HazardOptions options;
  options.points_per_dim = config.points_per_dim;
  options.threads = config.threads;
  spdlog::info("integrating hazard with {} points per dimension ({} kernels)",
               config.points_per_dim, simd::isa_name(simd::active_isa()));
  const ReliabilityResult result = analyze_reliability(in.mesh, in.faces, in.params, options);
  const HazardIntegration& hazard = result.hazard;
  for (const auto& s : hazard.skipped)
    spdlog::warn("skipped degenerate element {}: {}", s.id, s.reason);
  if (hazard.clamped_points > 0)
    spdlog::warn("{} integration points exceed the strain-life range; life clamped to {} cycles",
                 hazard.clamped_points, kMinimumLife);
  if (result.infinite_life()) spdlog::warn("total hazard is zero: infinite life, PoF is 0");

  const double m = result.m;
  const double eta = result.eta;
  const double report_cycles = std::isfinite(eta) ? config.report_nstar * eta : 0.0;

  const std::vector<double> cycles = config.grid.cycles(eta);
  write_pof_csv(config.out_dir / "pof.csv", cycles, eta, m);
  write_faces_csv(config.out_dir / "faces.csv", hazard.faces, m);
  write_density_vtk(config.out_dir / "density.vtk", in.mesh, in.faces, hazard.faces, report_cycles, m);

  AnalysisSummary summary;
  summary.eta = eta;
  summary.m = m;
  summary.total_hazard = hazard.total;
  summary.boundary_faces = in.faces.size();
  summary.skipped_elements = hazard.skipped.size();
  summary.pof_segment = pof(report_cycles, eta, m);
  summary.pof_component = aggregate_segments(summary.pof_segment, config.segments);

  double area = 0;
  for (const auto& f : hazard.faces) area += f.area;
  const auto top = top_faces_report(hazard.faces, report_cycles, m);
  std::size_t faces_for_90 = 0;
  double pof_top_90 = 0;
  for (const auto& row : top) {
    if (row.share >= 0.9) {
      faces_for_90 = row.rank;
      pof_top_90 = row.combined_pof;
      break;
    }
  }
  std::string skipped_ids;
  for (const auto& s : hazard.skipped) skipped_ids += (skipped_ids.empty() ? "" : " ") + std::to_string(s.id);

  std::vector<std::pair<std::string, std::string>> entries = {
      {"eta", format_double(eta)},
      {"weibull_shape", format_double(m)},
      {"total_hazard", format_double(hazard.total)},
      {"total_area", format_double(area)},
      {"points_per_dim", std::to_string(config.points_per_dim)},
      {"boundary_faces", std::to_string(in.faces.size())},
      {"evaluated_faces", std::to_string(hazard.faces.size())},
      {"quadrature_points", std::to_string(hazard.points)},
      {"clamped_points", std::to_string(hazard.clamped_points)},
      {"skipped_elements", std::to_string(hazard.skipped.size())},
      {"skipped_element_ids", skipped_ids.empty() ? "none" : skipped_ids},
      {"report_nstar", format_double(config.report_nstar)},
      {"report_cycles", format_double(report_cycles)},
      {"pof_segment", format_double(summary.pof_segment)},
      {"segments", std::to_string(config.segments)},
      {"pof_component", format_double(summary.pof_component)},
      {"faces_for_90pct_hazard", std::to_string(faces_for_90)},
      {"pof_faces_for_90pct_hazard", format_double(pof_top_90)},
  };
  const std::size_t shown = std::min<std::size_t>(top.size(), 10);
  for (std::size_t r = 0; r < shown; ++r) {
    const auto& row = top[r];
    entries.emplace_back(fmt::format("top_face_{}", row.rank),
                         fmt::format("{} {} {:.17g} {:.17g} {:.17g}", row.element_id,
                                     row.local_face + 1, row.density, row.share, row.combined_pof));
  }
  write_key_values(config.out_dir / "summary.txt", entries);
  spdlog::info("eta = {:.6g} cycles, m = {}, PoF at N* = {} : {:.6g} (x{} segments: {:.6g})", eta,
               m, config.report_nstar, summary.pof_segment, config.segments, summary.pof_component);
  return summary;
}

std::vector<ConvergenceRow> run_convergence_study(const RunConfig& config) {
  config.validate();
  const Inputs in = load_inputs(config);
  prepare_out_dir(config.out_dir);
  std::vector<ConvergenceRow> rows;
  for (int lq = 1; lq <= kMaxPointsPerDim; ++lq) {
    HazardOptions options;
    options.points_per_dim = lq;
    options.threads = config.threads;
    const ReliabilityResult r = analyze_reliability(in.mesh, in.faces, in.params, options);
    rows.push_back({lq, r.eta, 0});
    spdlog::info("lq = {}: eta = {:.10g}", lq, r.eta);
  }
  const double eta6 = rows.back().eta;
  for (auto& row : rows) row.eta_over_eta6 = row.eta / eta6;

  const auto path = config.out_dir / "convergence.csv";
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "lq,eta,eta_over_eta6\n";
  for (const auto& row : rows)
    fmt::print(out, "{},{:.17g},{:.17g}\n", row.points_per_dim, row.eta, row.eta_over_eta6);
  return rows;
}

}  // namespace lcf::app
