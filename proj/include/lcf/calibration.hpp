#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lcf/material.hpp"

namespace lcf {

/// One strain-controlled specimen test that ended in crack initiation.
struct SpecimenRecord {
  double cycles = 0;  // n_i
  double strain_amplitude = 0;  // eps_i on the gauge surface
  double gauge_area = 0;  // A_i

  void validate() const;
};

/// CSV with header `n_cycles,strain_amplitude,gauge_area`.
std::vector<SpecimenRecord> read_specimens(const std::filesystem::path& path);
void write_specimens(const std::filesystem::path& path, std::span<const SpecimenRecord> records);

/// Weibull scale of a homogeneously loaded gauge surface,
/// N_det(eps_i) * A_i^(-1/m). No Neuber step: the strain is controlled.
double specimen_eta(const SpecimenRecord& record, const MaterialParams& params);

/// Sum of log Weibull densities. Returns -inf for inadmissible parameters.
double log_likelihood(std::span<const SpecimenRecord> records, const MaterialParams& params);

enum class FitParameter {
  FatigueStrength,
  StrengthExponent,
  FatigueDuctility,
  DuctilityExponent,
  WeibullShape,
  HardeningCoefficient,
  HardeningExponent,
};

std::string_view fit_parameter_name(FitParameter p);
FitParameter parse_fit_parameter(std::string_view name);
double fit_parameter_value(const MaterialParams& params, FitParameter p);

/// Default fitted subset: the CMB parameters and m. Ramberg-Osgood
/// parameters do not enter the specimen likelihood.
std::vector<FitParameter> default_fit_parameters();

/// Maps the fitted parameters to an unconstrained vector (log for positive
/// values, log(-x) for negative exponents, log(m - 1), logit(n)).
std::vector<double> to_unconstrained(const MaterialParams& params,
                                     std::span<const FitParameter> fitted);
MaterialParams from_unconstrained(const MaterialParams& base, std::span<const FitParameter> fitted,
                                  std::span<const double> x);

struct FitOptions {
  std::vector<FitParameter> parameters = default_fit_parameters();
  int restarts = 5;
  std::uint64_t seed = 1;
  int max_iterations = 20000;
  double simplex_tolerance = 1e-9;
  double stagnation_tolerance = 1e-12;  // relative objective change per window
  double initial_step = 0.25;
  double perturbation = 0.2;  // std. dev. of restart offsets, unconstrained space
};

struct RestartTrace {
  int restart = 0;
  double start_log_likelihood = 0;
  double final_log_likelihood = 0;
  int iterations = 0;
  bool converged = false;
};

struct FitResult {
  MaterialParams params;
  double log_likelihood = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<RestartTrace> trace;
  std::vector<std::string> warnings;
  bool under_determined = false;
};

/// Maximizes log_likelihood with Nelder-Mead in unconstrained coordinates
/// from `initial` and `options.restarts - 1` perturbed copies; returns the
/// best converged run. Throws NumericalError if no run converged.
FitResult fit_mle(std::span<const SpecimenRecord> records, const MaterialParams& initial,
                  const FitOptions& options = {});

}  // namespace lcf
