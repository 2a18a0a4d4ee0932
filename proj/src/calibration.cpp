#include "lcf/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "lcf/compensated_sum.hpp"
#include "lcf/error.hpp"
#include "lcf/report_io.hpp"

namespace lcf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double& field(MaterialParams& p, FitParameter which) {
  switch (which) {
    case FitParameter::FatigueStrength: return p.fatigue_strength;
    case FitParameter::StrengthExponent: return p.strength_exponent;
    case FitParameter::FatigueDuctility: return p.fatigue_ductility;
    case FitParameter::DuctilityExponent: return p.ductility_exponent;
    case FitParameter::WeibullShape: return p.weibull_shape;
    case FitParameter::HardeningCoefficient: return p.hardening_coefficient;
    case FitParameter::HardeningExponent: return p.hardening_exponent;
  }
  throw DomainError("unknown fit parameter");
}

double to_free(FitParameter which, double v) {
  switch (which) {
    case FitParameter::StrengthExponent:
    case FitParameter::DuctilityExponent: return std::log(-v);
    case FitParameter::WeibullShape: return std::log(v - 1);
    case FitParameter::HardeningExponent: return std::log(v / (1 - v));
    default: return std::log(v);
  }
}

double from_free(FitParameter which, double x) {
  switch (which) {
    case FitParameter::StrengthExponent:
    case FitParameter::DuctilityExponent: return -std::exp(x);
    case FitParameter::WeibullShape: return 1 + std::exp(x);
    case FitParameter::HardeningExponent: return 1 / (1 + std::exp(-x));
    default: return std::exp(x);
  }
}

struct Objective {
  std::span<const SpecimenRecord> records;
  const MaterialParams* base;
  std::span<const FitParameter> fitted;
};

double negative_log_likelihood(const gsl_vector* v, void* data) {
  const auto* obj = static_cast<const Objective*>(data);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  const double ll = log_likelihood(obj->records, from_unconstrained(*obj->base, obj->fitted, x));
  // The simplex cannot use infinities; a huge finite value rejects the point.
  return std::isfinite(ll) ? -ll : 1e300;
}

struct RunOutcome {
  std::vector<double> x;
  double log_likelihood = kNegInf;
  int iterations = 0;
  bool converged = false;
};

RunOutcome nelder_mead(const Objective& objective, std::vector<double> start,
                       const FitOptions& options) {
  const std::size_t dim = start.size();
  gsl_multimin_function fn{&negative_log_likelihood, dim, const_cast<Objective*>(&objective)};
  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  gsl_multimin_fminimizer* solver = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  RunOutcome out;
  // Two passes: the second restarts the simplex at the first optimum, which
  // guards against a collapsed simplex stopping short of the maximum.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < dim; ++i) {
      gsl_vector_set(x, i, start[i]);
      gsl_vector_set(step, i, options.initial_step);
    }
    gsl_multimin_fminimizer_set(solver, &fn, x, step);
    int status = GSL_CONTINUE;
    int it = 0;
    // Stagnation window: on a flat ridge of the likelihood the simplex never
    // shrinks, but the objective stops improving.
    const int window = 50 * static_cast<int>(dim);
    double anchor = solver->fval;
    int anchor_it = 0;
    while (status == GSL_CONTINUE && it < options.max_iterations) {
      ++it;
      if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
      status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver), options.simplex_tolerance);
      if (status == GSL_CONTINUE && it - anchor_it >= window) {
        if (anchor - solver->fval <= options.stagnation_tolerance * (1 + std::abs(solver->fval)) &&
            solver->fval < 1e300)
          status = GSL_SUCCESS;
        anchor = solver->fval;
        anchor_it = it;
      }
    }
    out.iterations += it;
    out.converged = status == GSL_SUCCESS;
    for (std::size_t i = 0; i < dim; ++i) start[i] = gsl_vector_get(solver->x, i);
    if (!out.converged) break;
  }
  out.x = start;
  out.log_likelihood = solver->fval >= 1e300 ? kNegInf : -solver->fval;
  gsl_multimin_fminimizer_free(solver);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return out;
}

}  // namespace

void SpecimenRecord::validate() const {
  if (!(cycles > 0) || !std::isfinite(cycles)) throw DomainError("specimen cycles must be positive");
  if (!(strain_amplitude > 0) || !std::isfinite(strain_amplitude))
    throw DomainError("specimen strain amplitude must be positive");
  if (!(gauge_area > 0) || !std::isfinite(gauge_area))
    throw DomainError("specimen gauge area must be positive");
}

std::vector<SpecimenRecord> read_specimens(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  const std::vector<std::string> expected = {"n_cycles", "strain_amplitude", "gauge_area"};
  if (table.header != expected)
    throw ParseError(path.string(), 1, "expected header n_cycles,strain_amplitude,gauge_area");
  std::vector<SpecimenRecord> records;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    SpecimenRecord r{table.rows[i][0], table.rows[i][1], table.rows[i][2]};
    try {
      r.validate();
    } catch (const DomainError& e) {
      throw ParseError(path.string(), 0, "record " + std::to_string(i + 1) + ": " + e.what());
    }
    records.push_back(r);
  }
  return records;
}

void write_specimens(const std::filesystem::path& path, std::span<const SpecimenRecord> records) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "n_cycles,strain_amplitude,gauge_area\n";
  for (const auto& r : records)
    fmt::print(out, "{:.17g},{:.17g},{:.17g}\n", r.cycles, r.strain_amplitude, r.gauge_area);
}

double specimen_eta(const SpecimenRecord& record, const MaterialParams& params) {
  record.validate();
  const double n_det = cmb_life(record.strain_amplitude, params.cmb());
  return n_det * std::pow(record.gauge_area, -1 / params.weibull_shape);
}

double log_likelihood(std::span<const SpecimenRecord> records, const MaterialParams& params) {
  try {
    params.cmb().validate();
  } catch (const DomainError&) {
    return kNegInf;
  }
  const double m = params.weibull_shape;
  if (!(m >= 1) || !std::isfinite(m)) return kNegInf;
  CompensatedSum sum;
  for (const SpecimenRecord& r : records) {
    double eta = 0;
    try {
      eta = specimen_eta(r, params);
    } catch (const Error&) {
      return kNegInf;
    }
    if (!std::isfinite(eta)) return kNegInf;
    const double log_ratio = std::log(r.cycles) - std::log(eta);
    sum += std::log(m) - std::log(eta) + (m - 1) * log_ratio - std::exp(m * log_ratio);
  }
  return sum.value();
}

std::string_view fit_parameter_name(FitParameter p) {
  switch (p) {
    case FitParameter::FatigueStrength: return "sigma_f";
    case FitParameter::StrengthExponent: return "b";
    case FitParameter::FatigueDuctility: return "eps_f";
    case FitParameter::DuctilityExponent: return "c";
    case FitParameter::WeibullShape: return "m_weibull";
    case FitParameter::HardeningCoefficient: return "K";
    case FitParameter::HardeningExponent: return "n_ro";
  }
  return "?";
}

FitParameter parse_fit_parameter(std::string_view name) {
  for (auto p : {FitParameter::FatigueStrength, FitParameter::StrengthExponent,
                 FitParameter::FatigueDuctility, FitParameter::DuctilityExponent,
                 FitParameter::WeibullShape, FitParameter::HardeningCoefficient,
                 FitParameter::HardeningExponent})
    if (fit_parameter_name(p) == name) return p;
  throw DomainError("unknown fit parameter '" + std::string(name) + "'");
}

double fit_parameter_value(const MaterialParams& params, FitParameter p) {
  MaterialParams copy = params;
  return field(copy, p);
}

std::vector<FitParameter> default_fit_parameters() {
  return {FitParameter::FatigueStrength, FitParameter::StrengthExponent,
          FitParameter::FatigueDuctility, FitParameter::DuctilityExponent,
          FitParameter::WeibullShape};
}

std::vector<double> to_unconstrained(const MaterialParams& params,
                                     std::span<const FitParameter> fitted) {
  MaterialParams copy = params;
  std::vector<double> x;
  for (FitParameter p : fitted) {
    const double v = field(copy, p);
    const double t = to_free(p, v);
    if (!std::isfinite(t))
      throw DomainError("initial value of " + std::string(fit_parameter_name(p)) +
                        " lies on or outside its admissible boundary");
    x.push_back(t);
  }
  return x;
}

MaterialParams from_unconstrained(const MaterialParams& base, std::span<const FitParameter> fitted,
                                  std::span<const double> x) {
  if (x.size() != fitted.size()) throw DomainError("parameter vector size mismatch");
  MaterialParams p = base;
  for (std::size_t i = 0; i < fitted.size(); ++i) field(p, fitted[i]) = from_free(fitted[i], x[i]);
  return p;
}

FitResult fit_mle(std::span<const SpecimenRecord> records, const MaterialParams& initial,
                  const FitOptions& options) {
  gsl_set_error_handler_off();
  if (records.empty()) throw DomainError("no specimen records");
  if (options.parameters.empty()) throw DomainError("no parameters selected for fitting");
  if (options.restarts < 1) throw DomainError("at least one optimizer run is required");
  for (const auto& r : records) r.validate();

  FitResult result;
  std::set<double> levels;
  std::set<double> lives;
  for (const auto& r : records) {
    levels.insert(r.strain_amplitude);
    lives.insert(r.cycles);
  }
  if (records.size() < 3 || levels.size() < 2) {
    result.under_determined = true;
    result.warnings.push_back("under-determined data: need >= 3 records at >= 2 strain levels");
  }
  const bool fits_m = std::find(options.parameters.begin(), options.parameters.end(),
                                FitParameter::WeibullShape) != options.parameters.end();
  const bool degenerate = lives.size() == 1 && fits_m;
  if (degenerate)
    result.warnings.push_back("all cycle counts are equal: Weibull shape m is unbounded above");

  const Objective objective{records, &initial, options.parameters};
  const std::vector<double> x0 = to_unconstrained(initial, options.parameters);
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> offset(0.0, options.perturbation);

  RunOutcome best, best_any;
  bool any_converged = false;
  for (int run = 0; run < options.restarts; ++run) {
    std::vector<double> start = x0;
    if (run > 0)
      for (double& v : start) v += offset(rng);
    RestartTrace trace;
    trace.restart = run;
    trace.start_log_likelihood =
        log_likelihood(records, from_unconstrained(initial, options.parameters, start));
    const RunOutcome outcome = nelder_mead(objective, start, options);
    trace.final_log_likelihood = outcome.log_likelihood;
    trace.iterations = outcome.iterations;
    trace.converged = outcome.converged;
    result.trace.push_back(trace);
    result.iterations += outcome.iterations;
    if (run == 0 || outcome.log_likelihood > best_any.log_likelihood) best_any = outcome;
    if (!outcome.converged) continue;
    if (!any_converged || outcome.log_likelihood > best.log_likelihood) best = outcome;
    any_converged = true;
  }
  if (!any_converged && (degenerate || result.under_determined)) {
    result.params = from_unconstrained(initial, options.parameters, best_any.x);
    result.log_likelihood = best_any.log_likelihood;
    result.converged = false;
    return result;
  }
  if (!any_converged) {
    std::string msg = "maximum-likelihood fit failed: no optimizer run converged";
    for (const auto& t : result.trace)
      msg += fmt::format("\n  run {}: start ll {:.6g}, final ll {:.6g}, {} iterations", t.restart,
                         t.start_log_likelihood, t.final_log_likelihood, t.iterations);
    throw NumericalError(msg);
  }
  result.params = from_unconstrained(initial, options.parameters, best.x);
  result.log_likelihood = best.log_likelihood;
  result.converged = true;
  return result;
}

}  // namespace lcf
