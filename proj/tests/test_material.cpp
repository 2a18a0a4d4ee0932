#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lcf/error.hpp"
#include "lcf/material.hpp"
#include "lcf/material_io.hpp"

using namespace lcf;

namespace {

// Plain bisection to a tight width, used as an independent oracle.
template <typename F>
double bisect(F f, double lo, double hi) {
  const bool increasing = f(hi) > f(lo);
  for (int i = 0; i < 400 && hi - lo > 1e-14 * std::abs(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == increasing)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Ramberg-Osgood strain") {
  const RambergOsgoodParams p{200000, 1000, 0.1};
  CHECK(ramberg_osgood_strain(0, p) == 0);
  CHECK(ramberg_osgood_strain(1000, p) == doctest::Approx(1000 / 200000.0 + 1));
  CHECK(ramberg_osgood_strain(500, p) == doctest::Approx(0.0025 + std::pow(0.5, 10)).epsilon(1e-14));
  CHECK(ramberg_osgood_strain(500, p) == doctest::Approx(0.00347656).epsilon(1e-6));
  CHECK_THROWS_AS(ramberg_osgood_strain(-1, p), DomainError);
}

TEST_CASE("Neuber shakedown") {
  const RambergOsgoodParams p{200000, 1000, 0.1};
  CHECK(neuber_shakedown(0, 1, p) == 0);
  const double s = neuber_shakedown(800, 1, p);
  const double lhs = 800.0 * 800.0 / 200000;
  const double rhs = s * s / 200000 + s * std::pow(s / 1000, 10);
  CHECK(std::abs(lhs - rhs) / lhs < 1e-10);
  const double oracle = bisect([&](double x) { return x * x / 200000 + x * std::pow(x / 1000, 10) - lhs; }, 0, 800);
  CHECK(s == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(s < 800);
  CHECK(neuber_shakedown(800, 1, p) == neuber_shakedown(800, 1, p));
}

TEST_CASE("Neuber shakedown is monotone and below the elastic line") {
  const RambergOsgoodParams p{200000, 1000, 0.1};
  for (double kt : {1.0, 1.8, 3.0}) {
    double previous = 0;
    for (int i = 0; i <= 100; ++i) {
      const double s = 1000 * std::pow(10.0, -3 + 5 * i / 100.0);
      const double sd = neuber_shakedown(s, kt, p);
      CHECK(sd >= 0);
      CHECK(sd <= kt * s);
      CHECK(sd > previous);
      previous = sd;
    }
    CHECK(neuber_shakedown(1e-3 * 1000, kt, p) == doctest::Approx(kt * 1.0).epsilon(1e-3));
  }
}

TEST_CASE("CMB single-term inversions") {
  const CmbParams basquin{900, -0.09, 0, -0.6, 200000};
  const CmbParams coffin{0, -0.09, 0.3, -0.6, 200000};
  for (double eps : {1e-3, 2e-3, 4e-3}) {
    const double n = 0.5 * std::pow(eps * 200000 / 900, 1 / -0.09);
    CHECK(cmb_life(eps, basquin) == doctest::Approx(n).epsilon(1e-10));
  }
  for (double eps : {1e-3, 1e-2, 0.05}) {
    const double n = 0.5 * std::pow(eps / 0.3, 1 / -0.6);
    CHECK(cmb_life(eps, coffin) == doctest::Approx(n).epsilon(1e-10));
  }
}

TEST_CASE("CMB round trip and clamping") {
  const CmbParams p = lcf::testing::steel().cmb();
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(std::log(2e-3), std::log(0.2));
  for (int i = 0; i < 1000; ++i) {
    const double eps = std::exp(u(rng));
    const CmbSolution s = solve_cmb_life(eps, p);
    CHECK_FALSE(s.clamped);
    CHECK(std::abs(cmb_strain(s.cycles, p) - eps) / eps < 1e-10);
  }
  const double top = cmb_strain(kMinimumLife, p);
  const CmbSolution clamped = solve_cmb_life(2 * top, p);
  CHECK(clamped.clamped);
  CHECK(clamped.cycles == kMinimumLife);
  CHECK(cmb_life(top, p) == kMinimumLife);
  CHECK_THROWS_AS(cmb_life(0, p), DomainError);
}

TEST_CASE("tiny strains give infinite life") {
  const CmbParams p = lcf::testing::steel().cmb();
  CHECK(std::isinf(cmb_life(1e-300, p)));
}

TEST_CASE("life from elastic stress") {
  const MaterialParams p = lcf::testing::steel();
  CHECK(std::isinf(life_scale_from_elastic_stress(0, p)));
  CHECK(std::pow(life_scale_from_elastic_stress(0, p), -p.weibull_shape) == 0);

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(100, 3000);
  std::vector<double> stresses(200);
  for (double& s : stresses) s = u(rng);
  std::sort(stresses.begin(), stresses.end());
  for (std::size_t i = 1; i < stresses.size(); ++i)
    CHECK(life_scale_from_elastic_stress(stresses[i - 1], p) > life_scale_from_elastic_stress(stresses[i], p));

  // Independent chain: bisection for Neuber and for CMB in log N.
  const double E = p.youngs_modulus, K = p.hardening_coefficient, n = p.hardening_exponent;
  for (int i = 0; i < 100; ++i) {
    const double se = u(rng);
    const double peak = 0.5 * se;
    const double sa =
        bisect([&](double x) { return x * x / E + x * std::pow(x / K, 1 / n) - peak * peak / E; }, 0, peak);
    const double ea = sa / E + std::pow(sa / K, 1 / n);
    const double logn = bisect([&](double x) { return ea - cmb_strain(std::exp(x), p.cmb()); },
                               std::log(kMinimumLife), std::log(1e30));
    CHECK(life_scale_from_elastic_stress(se, p) == doctest::Approx(std::exp(logn)).epsilon(1e-8));
  }
}

TEST_CASE("amplitude mode switch") {
  MaterialParams p = lcf::testing::steel();
  const double halve_first = life_scale_from_elastic_stress(1500, p);
  p.amplitude_mode = AmplitudeMode::InvertThenHalve;
  const double invert_first = life_scale_from_elastic_stress(1500, p);
  const RambergOsgoodParams ro = p.ramberg_osgood();
  const double expected = cmb_life(ramberg_osgood_strain(0.5 * neuber_shakedown(1500, 1, ro), ro), p.cmb());
  CHECK(invert_first == doctest::Approx(expected).epsilon(1e-12));
  CHECK(invert_first != halve_first);
}

TEST_CASE("notch factor shortens life") {
  MaterialParams p = lcf::testing::steel();
  const double plain = life_scale_from_elastic_stress(800, p);
  p.notch_factor = 2;
  CHECK(life_scale_from_elastic_stress(800, p) < plain);
}

TEST_CASE("parameter validation") {
  MaterialParams p = lcf::testing::steel();
  CHECK_NOTHROW(p.validate());
  auto bad = p;
  bad.weibull_shape = 0.8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.strength_exponent = 0.1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.hardening_exponent = 1.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.notch_factor = 0.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("material file round trip and errors") {
  const MaterialParams p = lcf::testing::steel();
  std::stringstream ss;
  write_material(ss, p);
  const MaterialParams q = parse_material(ss);
  CHECK(q.youngs_modulus == p.youngs_modulus);
  CHECK(q.hardening_exponent == p.hardening_exponent);
  CHECK(q.ductility_exponent == p.ductility_exponent);
  CHECK(q.weibull_shape == p.weibull_shape);
  CHECK(q.amplitude_mode == p.amplitude_mode);

  std::istringstream missing("E = 1\nnu = 0.3\n");
  CHECK_THROWS_AS(parse_material(missing), ParseError);

  std::istringstream garbage("E = 200000\nnu = abc\n");
  try {
    parse_material(garbage, "m.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::stringstream unknown;
  write_material(unknown, p);
  unknown << "colour = blue\n";
  CHECK_THROWS_AS(parse_material(unknown), ParseError);

  std::stringstream invalid;
  auto bad = p;
  bad.weibull_shape = 0.5;
  write_material(invalid, bad);
  CHECK_THROWS_AS(parse_material(invalid), ParseError);
}
