#include <filesystem>
#include <fstream>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include "lcf/app.hpp"
#include "lcf/calibration.hpp"
#include "lcf/material_io.hpp"

namespace lcf::app {
namespace {

void write_trace(const std::filesystem::path& path, const std::vector<RestartTrace>& trace) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "restart,start_log_likelihood,final_log_likelihood,iterations,converged\n";
  for (const auto& t : trace)
    fmt::print(out, "{},{:.17g},{:.17g},{},{}\n", t.restart, t.start_log_likelihood,
               t.final_log_likelihood, t.iterations, t.converged ? 1 : 0);
}

}  // namespace

void run_calibration(const CalibrationConfig& config) {
  if (config.restarts < 1) throw UsageError("--restarts must be at least 1");
  if (!std::filesystem::exists(config.data_path))
    throw UsageError("specimen data not found: " + config.data_path.string());
  if (!std::filesystem::exists(config.fixed_path))
    throw UsageError("parameter file not found: " + config.fixed_path.string());

  const std::vector<SpecimenRecord> records = read_specimens(config.data_path);
  const MaterialParams initial = read_material(config.fixed_path);
  spdlog::info("{} specimen records", records.size());
  std::set<double> levels;
  for (const auto& r : records) levels.insert(r.strain_amplitude);
  if (records.size() < 3 || levels.size() < 2) {
    spdlog::warn("under-determined data: {} records at {} strain levels", records.size(), levels.size());
    throw ParseError(config.data_path.string(), 0,
                     "too few records for calibration (need >= 3 at >= 2 strain levels)");
  }

  FitOptions options;
  options.seed = config.seed;
  options.restarts = config.restarts;
  if (!config.parameters.empty()) {
    options.parameters.clear();
    for (const auto& name : config.parameters) {
      try {
        options.parameters.push_back(parse_fit_parameter(name));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw Error("cannot create output directory " + config.out_dir.string());
  const auto trace_path = config.out_dir / "fit_trace.txt";

  FitResult fit;
  try {
    fit = fit_mle(records, initial, options);
  } catch (const NumericalError& e) {
    std::ofstream(trace_path) << e.what() << '\n';
    throw NumericalError(fmt::format("{} (trace: {})", e.what(), trace_path.string()));
  }
  for (const auto& w : fit.warnings) spdlog::warn("{}", w);
  write_trace(trace_path, fit.trace);

  write_material(config.out_dir / "fitted_material.txt", fit.params);

  std::vector<std::pair<std::string, std::string>> report = {
      {"log_likelihood", fmt::format("{:.17g}", fit.log_likelihood)},
      {"initial_log_likelihood", fmt::format("{:.17g}", log_likelihood(records, initial))},
      {"iterations", std::to_string(fit.iterations)},
      {"converged", fit.converged ? "true" : "false"},
      {"records", std::to_string(records.size())},
      {"restarts", std::to_string(options.restarts)},
      {"seed", std::to_string(options.seed)},
  };
  std::string fitted;
  for (FitParameter p : options.parameters) fitted += (fitted.empty() ? "" : " ") + std::string(fit_parameter_name(p));
  report.emplace_back("fitted_parameters", fitted);
  for (FitParameter p : options.parameters)
    report.emplace_back(std::string(fit_parameter_name(p)),
                        fmt::format("{:.17g}", fit_parameter_value(fit.params, p)));
  report.emplace_back("warnings", std::to_string(fit.warnings.size()));
  for (std::size_t i = 0; i < fit.warnings.size(); ++i)
    report.emplace_back(fmt::format("warning_{}", i + 1), fit.warnings[i]);
  write_key_values(config.out_dir / "fit_report.txt", report);
  spdlog::info("log-likelihood {:.10g} after {} iterations; m = {:.6g}", fit.log_likelihood,
               fit.iterations, fit.params.weibull_shape);
}

}  // namespace lcf::app
