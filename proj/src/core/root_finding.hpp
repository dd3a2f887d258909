#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace abflux {

/// Root of f in [lo, hi] given f(lo) and f(hi) of opposite sign.
///
/// Illinois-modified regula falsi, falling back to bisection whenever the
/// interpolated point leaves the bracket or two consecutive steps fail to
/// halve it. Stops when the bracket is narrower than
/// rel_tol * |x| + abs_tol.
template <typename F>
double find_root_bracketed(F&& f, double lo, double hi, double f_lo, double f_hi,
                           double rel_tol, double abs_tol = 0.0, int max_iterations = 200) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw ConvergenceError("root bracket does not enclose a sign change");
  }
  int side = 0;  // which end was retained on the previous step
  int slow_steps = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    double x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    const double width = std::abs(hi - lo);
    if (!(x > std::min(lo, hi) && x < std::max(lo, hi)) || slow_steps >= 2) {
      x = 0.5 * (lo + hi);
      slow_steps = 0;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = fx;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    const double new_width = std::abs(hi - lo);
    slow_steps = new_width > 0.5 * width ? slow_steps + 1 : 0;
    if (new_width <= rel_tol * std::abs(x) + abs_tol) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("root refinement did not converge in " +
                         std::to_string(max_iterations) + " iterations");
}

}  // namespace abflux
