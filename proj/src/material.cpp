#include "lcf/material.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lcf/error.hpp"
#include "lcf/root_find.hpp"

namespace lcf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool positive(double v) { return v > 0 && std::isfinite(v); }

}  // namespace

void RambergOsgoodParams::validate() const {
  if (!positive(youngs_modulus)) throw DomainError("Ramberg-Osgood: E must be positive");
  if (!positive(hardening_coefficient)) throw DomainError("Ramberg-Osgood: K must be positive");
  if (!(hardening_exponent > 0 && hardening_exponent < 1))
    throw DomainError("Ramberg-Osgood: n must lie in (0, 1)");
}

void CmbParams::validate() const {
  if (!positive(youngs_modulus)) throw DomainError("CMB: E must be positive");
  if (!(fatigue_strength >= 0) || !std::isfinite(fatigue_strength))
    throw DomainError("CMB: sigma_f must be non-negative");
  if (!(fatigue_ductility >= 0) || !std::isfinite(fatigue_ductility))
    throw DomainError("CMB: eps_f must be non-negative");
  if (fatigue_strength == 0 && fatigue_ductility == 0)
    throw DomainError("CMB: sigma_f and eps_f cannot both vanish");
  if (!(strength_exponent < 0) || !std::isfinite(strength_exponent))
    throw DomainError("CMB: b must be negative");
  if (!(ductility_exponent < 0) || !std::isfinite(ductility_exponent))
    throw DomainError("CMB: c must be negative");
}

void MaterialParams::validate() const {
  elastic().validate();
  ramberg_osgood().validate();
  cmb().validate();
  if (!(fatigue_strength > 0)) throw DomainError("sigma_f must be positive");
  if (!(weibull_shape >= 1) || !std::isfinite(weibull_shape))
    throw DomainError("Weibull shape m must be >= 1");
  if (!(notch_factor >= 1) || !std::isfinite(notch_factor))
    throw DomainError("notch factor K_t must be >= 1");
}

double ramberg_osgood_strain(double stress, const RambergOsgoodParams& p) {
  if (!(stress >= 0)) throw DomainError("Ramberg-Osgood: stress must be non-negative");
  return stress / p.youngs_modulus +
         std::pow(stress / p.hardening_coefficient, 1 / p.hardening_exponent);
}

double neuber_shakedown(double elastic_stress, double notch_factor, const RambergOsgoodParams& p) {
  if (!(elastic_stress >= 0)) throw DomainError("Neuber: elastic stress must be non-negative");
  if (elastic_stress == 0) return 0;
  const double peak = notch_factor * elastic_stress;
  if (!std::isfinite(peak)) throw DomainError("Neuber: elastic stress must be finite");
  const double E = p.youngs_modulus;
  const double inv_n = 1 / p.hardening_exponent;
  const double lhs = peak * peak / E;
  auto residual = [&](double s) {
    return s * s / E + s * std::pow(s / p.hardening_coefficient, inv_n) - lhs;
  };
  return solve_bracketed(residual, 0.0, peak, -lhs, residual(peak), lhs);
}

double cmb_strain(double cycles, const CmbParams& p) {
  const double reversals = 2 * cycles;
  return p.fatigue_strength / p.youngs_modulus * std::pow(reversals, p.strength_exponent) +
         p.fatigue_ductility * std::pow(reversals, p.ductility_exponent);
}

CmbSolution solve_cmb_life(double strain_amplitude, const CmbParams& p) {
  if (!(strain_amplitude > 0)) throw DomainError("CMB: strain amplitude must be positive");
  // Solve in x = log(2N); the residual is strictly decreasing in x.
  const double elastic = p.fatigue_strength / p.youngs_modulus;
  auto residual = [&](double x) {
    return elastic * std::exp(p.strength_exponent * x) +
           p.fatigue_ductility * std::exp(p.ductility_exponent * x) - strain_amplitude;
  };
  double lo = std::log(2 * kMinimumLife);
  double f_lo = residual(lo);
  if (f_lo <= 0) return {kMinimumLife, f_lo < 0};

  // Double N starting from 0.5 cycles until the residual changes sign.
  const double step = std::log(2.0);
  const double x_max = std::log(std::numeric_limits<double>::max());
  double hi = 0;
  double f_hi = residual(hi);
  while (f_hi > 0) {
    lo = hi;
    f_lo = f_hi;
    hi += step;
    if (hi > x_max) return {kInf, false};
    f_hi = residual(hi);
  }
  const double x = solve_bracketed(residual, lo, hi, f_lo, f_hi, strain_amplitude);
  return {0.5 * std::exp(x), false};
}

double cmb_life(double strain_amplitude, const CmbParams& p) {
  return solve_cmb_life(strain_amplitude, p).cycles;
}

CmbSolution life_from_elastic_stress(double elastic_stress, const MaterialParams& p) {
  if (!(elastic_stress >= 0)) throw DomainError("elastic stress must be non-negative");
  if (elastic_stress == 0) return {kInf, false};
  const RambergOsgoodParams ro = p.ramberg_osgood();
  double amplitude_stress = 0;
  if (p.amplitude_mode == AmplitudeMode::HalveThenInvert)
    amplitude_stress = neuber_shakedown(0.5 * elastic_stress, p.notch_factor, ro);
  else
    amplitude_stress = 0.5 * neuber_shakedown(elastic_stress, p.notch_factor, ro);
  const double strain = ramberg_osgood_strain(amplitude_stress, ro);
  if (strain == 0) return {kInf, false};
  return solve_cmb_life(strain, p.cmb());
}

double life_scale_from_elastic_stress(double elastic_stress, const MaterialParams& p) {
  return life_from_elastic_stress(elastic_stress, p).cycles;
}

}  // namespace lcf
