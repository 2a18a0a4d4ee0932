#pragma once

#include <cmath>
#include <utility>

#include "lcf/error.hpp"

namespace lcf {

struct RootOptions {
  double residual_tolerance = 1e-12;  // on |f| / scale
  double width_tolerance = 1e-14;  // on interval width relative to |x|
  int max_iterations = 200;
};

/// Bracketed Illinois (modified regula falsi) iteration with a bisection
/// fallback whenever the secant step stalls. Requires f(lo) and f(hi) of
/// opposite sign. `scale` normalizes the residual test.
template <typename F>
double solve_bracketed(F&& f, double lo, double hi, double f_lo, double f_hi, double scale,
                       const RootOptions& opt = {}) {
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if ((f_lo > 0) == (f_hi > 0)) throw NumericalError("root not bracketed");
  int side = 0;
  double x = lo;
  for (int it = 0; it < opt.max_iterations; ++it) {
    x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    const double width = hi - lo;
    // Keep the iterate well inside the bracket; otherwise bisect.
    if (!(x > lo + 0.01 * width && x < hi - 0.01 * width)) x = lo + 0.5 * width;
    const double fx = f(x);
    if (std::abs(fx) <= opt.residual_tolerance * scale) return x;
    if ((fx > 0) == (f_hi > 0)) {
      hi = x;
      f_hi = fx;
      if (side == -1) f_lo *= 0.5;
      side = -1;
    } else {
      lo = x;
      f_lo = fx;
      if (side == 1) f_hi *= 0.5;
      side = 1;
    }
    if (hi - lo <= opt.width_tolerance * std::max(std::abs(lo), std::abs(hi)))
      return std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
  }
  throw NumericalError("bracketed root solve did not converge in " +
                       std::to_string(opt.max_iterations) + " iterations (bracket [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "])");
}

}  // namespace lcf
