#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lcf/error.hpp"
#include "lcf/report_io.hpp"

namespace lcf::app {

/// Invalid command-line configuration (exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Stable process exit codes.
enum ExitCode : int { kSuccess = 0, kUsage = 1, kInput = 2, kNumerical = 3 };

/// Maps an in-flight exception to its exit code.
int exit_code_for(const std::exception& e);

struct RunConfig {
  std::filesystem::path mesh_path;
  std::filesystem::path material_path;
  int points_per_dim = 4;
  CycleGrid grid;
  int segments = 1;
  std::filesystem::path out_dir = ".";
  unsigned threads = 0;
  double report_nstar = 1e-3;  // report cycle as a multiple of eta

  void validate() const;
};

struct AnalysisSummary {
  double eta = 0;
  double m = 0;
  double total_hazard = 0;
  std::size_t boundary_faces = 0;
  std::size_t skipped_elements = 0;
  double pof_segment = 0;
  double pof_component = 0;
};

/// Writes pof.csv, faces.csv, density.vtk and summary.txt into out_dir.
AnalysisSummary run_analysis(const RunConfig& config);

struct ConvergenceRow {
  int points_per_dim = 0;
  double eta = 0;
  double eta_over_eta6 = 0;
};

/// eta for 1..6 points per dimension; writes convergence.csv into out_dir.
std::vector<ConvergenceRow> run_convergence_study(const RunConfig& config);

struct CalibrationConfig {
  std::filesystem::path data_path;
  std::filesystem::path fixed_path;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  int restarts = 5;
  std::vector<std::string> parameters;  // empty: default subset
};

/// Writes fitted_material.txt, fit_report.txt and fit_trace.txt. Throws
/// ParseError (exit 2) for too few records, NumericalError (exit 3) when the
/// optimizer fails.
void run_calibration(const CalibrationConfig& config);

}  // namespace lcf::app
