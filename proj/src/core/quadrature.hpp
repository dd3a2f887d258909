#pragma once

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace abflux {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  int levels = 0;
};

/// Double-exponential (tanh-sinh) quadrature of f over (a, b).
///
/// The integrand is called as f(x, distance_to_a, distance_to_b) where both
/// distances are computed without cancellation, so integrands with algebraic
/// endpoint singularities (or sqrt zeros) can be evaluated accurately right up
/// to the ends. Endpoints themselves are never sampled.
///
/// Each level halves the step; iteration stops once two successive levels
/// agree to rel_tol. Node sets are fixed, so results are deterministic.
template <typename F>
QuadratureResult integrate_tanh_sinh(F&& f, double a, double b, double rel_tol,
                                     int max_level = 12) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kTMax = 6.5;
  const double half_width = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  QuadratureResult result;

  // Sum of w_k f(x_k) over t = offset + j*step for |t| <= kTMax, t != 0 handled
  // separately by the caller at level 0.
  auto sweep = [&](double step, double offset) {
    double sum = 0.0;
    for (double t = offset; t <= kTMax; t += step) {
      const double u = kHalfPi * std::sinh(t);
      const double cosh_u = std::cosh(u);
      const double weight = kHalfPi * std::cosh(t) / (cosh_u * cosh_u);
      // 1 - tanh(u) = 2 e^{-2u} / (1 + e^{-2u})
      const double e = std::exp(-2.0 * u);
      const double complement = 2.0 * e / (1.0 + e);
      const double near = half_width * complement;  // distance to the close end
      const double far = half_width * (2.0 - complement);
      if (near <= 0.0 || weight == 0.0) break;
      const double right = f(b - near, far, near);
      const double left = f(a + near, near, far);
      sum += weight * (left + right);
      result.evaluations += 2;
    }
    return sum;
  };

  double step = 1.0;
  double sum = kHalfPi * f(mid, half_width, half_width);  // t = 0, weight pi/2
  result.evaluations = 1;
  sum += sweep(step, step);
  double estimate = half_width * step * sum;

  for (int level = 1; level <= max_level; ++level) {
    step *= 0.5;
    sum += sweep(2.0 * step, step);
    const double refined = half_width * step * sum;
    result.levels = level;
    result.error_estimate = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 3 && result.error_estimate <= rel_tol * std::abs(estimate)) {
      result.value = estimate;
      return result;
    }
  }
  throw ConvergenceError("tanh-sinh quadrature did not reach the requested tolerance");
}

}  // namespace abflux
