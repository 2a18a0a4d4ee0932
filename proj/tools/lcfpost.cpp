#include <exception>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "lcf/app.hpp"
#include "lcf/simd/kernels.hpp"

namespace {

void add_grid_options(CLI::App* cmd, lcf::CycleGrid& grid) {
  cmd->add_option("--grid-start", grid.start, "first cycle count of the PoF curve");
  cmd->add_option("--grid-stop", grid.stop, "last cycle count of the PoF curve");
  cmd->add_option("--grid-count", grid.count, "number of PoF curve points");
  cmd->add_flag("!--grid-linear", grid.logarithmic, "linear instead of logarithmic spacing");
  cmd->add_flag("!--grid-absolute", grid.relative_to_eta,
                "grid values are cycles rather than multiples of eta");
}

void add_model_options(CLI::App* cmd, lcf::app::RunConfig& config) {
  cmd->add_option("--mesh", config.mesh_path, "mesh file (nodes, elements, displacements)")->required();
  cmd->add_option("--material", config.material_path, "material parameter file")->required();
  cmd->add_option("--out", config.out_dir, "output directory");
  cmd->add_option("--threads", config.threads, "worker threads for face evaluation (0: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("lcfpost");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"Probabilistic LCF postprocessor for elastic FEA results"};
  app.set_config("--config", "", "read options from a TOML/INI file; flags override it");
  app.require_subcommand(1);
  int verbosity = 0;
  bool quiet = false;
  std::string isa;
  app.add_flag("-v,--verbose", verbosity, "more log output (repeatable)");
  app.add_flag("-q,--quiet", quiet, "only log errors");
  app.add_option("--simd", isa, "kernel set: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  lcf::app::RunConfig analyze_config;
  auto* analyze = app.add_subcommand("analyze", "hazard integration, PoF curve and reports");
  add_model_options(analyze, analyze_config);
  analyze->add_option("--lq", analyze_config.points_per_dim, "quadrature points per dimension")
      ->check(CLI::Range(1, 6));
  analyze->add_option("--segments", analyze_config.segments, "number of identical segments");
  analyze->add_option("--nstar", analyze_config.report_nstar,
                      "report cycle count as a multiple of eta");
  add_grid_options(analyze, analyze_config.grid);

  lcf::app::RunConfig convergence_config;
  auto* convergence = app.add_subcommand("convergence", "eta for 1..6 quadrature points per dimension");
  add_model_options(convergence, convergence_config);

  lcf::app::CalibrationConfig calibration_config;
  auto* calibrate = app.add_subcommand("calibrate", "maximum-likelihood fit to specimen data");
  calibrate->add_option("--data", calibration_config.data_path, "specimen CSV")->required();
  calibrate->add_option("--fixed", calibration_config.fixed_path,
                        "material file with fixed values and initial guesses")
      ->required();
  calibrate->add_option("--seed", calibration_config.seed, "restart seed");
  calibrate->add_option("--restarts", calibration_config.restarts, "optimizer runs");
  calibrate->add_option("--fit", calibration_config.parameters,
                        "fitted parameters (default: sigma_f b eps_f c m_weibull)")
      ->delimiter(',');
  calibrate->add_option("--out", calibration_config.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lcf::app::kSuccess : lcf::app::kUsage;
  }

  if (quiet)
    spdlog::set_level(spdlog::level::err);
  else if (verbosity > 0)
    spdlog::set_level(spdlog::level::debug);
  else
    spdlog::set_level(spdlog::level::info);

  try {
    if (isa == "scalar") lcf::simd::set_isa_override(lcf::simd::Isa::Scalar);
    if (isa == "avx2") {
      if (!lcf::simd::isa_available(lcf::simd::Isa::Avx2))
        throw lcf::app::UsageError("AVX2 kernels are not available on this CPU");
      lcf::simd::set_isa_override(lcf::simd::Isa::Avx2);
    }
    if (*analyze) {
      lcf::app::run_analysis(analyze_config);
    } else if (*convergence) {
      lcf::app::run_convergence_study(convergence_config);
    } else if (*calibrate) {
      lcf::app::run_calibration(calibration_config);
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return lcf::app::exit_code_for(e);
  }
  return lcf::app::kSuccess;
}
