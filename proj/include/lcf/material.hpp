#pragma once

#include "lcf/fields.hpp"

namespace lcf {

struct RambergOsgoodParams {
  double youngs_modulus = 0;  // E
  double hardening_coefficient = 0;  // K
  double hardening_exponent = 0;  // n

  void validate() const;
};

/// Coffin-Manson-Basquin strain-life curve
///   eps_a = sigma_f / E (2N)^b + eps_f (2N)^c.
struct CmbParams {
  double fatigue_strength = 0;  // sigma_f'
  double strength_exponent = 0;  // b
  double fatigue_ductility = 0;  // eps_f'
  double ductility_exponent = 0;  // c
  double youngs_modulus = 0;

  void validate() const;
};

/// How the zero-to-peak elastic von Mises stress becomes an amplitude.
enum class AmplitudeMode {
  HalveThenInvert,  // sigma_a = SD^-1(sigma_v^e / 2)
  InvertThenHalve,  // sigma_a = SD^-1(sigma_v^e) / 2
};

/// Full parameter set of the probabilistic LCF model.
struct MaterialParams {
  double youngs_modulus = 0;
  double poisson_ratio = 0;
  double hardening_coefficient = 0;
  double hardening_exponent = 0;
  double fatigue_strength = 0;
  double strength_exponent = 0;
  double fatigue_ductility = 0;
  double ductility_exponent = 0;
  double weibull_shape = 0;  // m
  double notch_factor = 1;  // K_t
  AmplitudeMode amplitude_mode = AmplitudeMode::HalveThenInvert;

  ElasticConstants elastic() const { return {youngs_modulus, poisson_ratio}; }
  RambergOsgoodParams ramberg_osgood() const {
    return {youngs_modulus, hardening_coefficient, hardening_exponent};
  }
  CmbParams cmb() const {
    return {fatigue_strength, strength_exponent, fatigue_ductility, ductility_exponent,
            youngs_modulus};
  }
  void validate() const;
};

double ramberg_osgood_strain(double stress, const RambergOsgoodParams& p);

/// Elastic-plastic stress sigma solving
///   (K_t s)^2 / E = sigma^2 / E + sigma (sigma / K)^(1/n).
double neuber_shakedown(double elastic_stress, double notch_factor, const RambergOsgoodParams& p);

double cmb_strain(double cycles, const CmbParams& p);

/// Smallest life returned; strains above the curve at this life are clamped.
inline constexpr double kMinimumLife = 0.25;

struct CmbSolution {
  double cycles = 0;
  bool clamped = false;  // strain above the curve's range at kMinimumLife
};

CmbSolution solve_cmb_life(double strain_amplitude, const CmbParams& p);
double cmb_life(double strain_amplitude, const CmbParams& p);

/// Deterministic life N_det for an elastic von Mises stress. Returns +inf for
/// zero stress, so that pow(N_det, -m) is exactly zero.
double life_scale_from_elastic_stress(double elastic_stress, const MaterialParams& p);
CmbSolution life_from_elastic_stress(double elastic_stress, const MaterialParams& p);

}  // namespace lcf
