#pragma once

// Independent reference values for the tests. Nothing here calls into the
// library under test.

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace ref {

inline double pi() { return std::numbers::pi; }

inline double bessel_j(double order, double x) { return boost::math::cyl_bessel_j(order, x); }

inline double bessel_j_zero(double order, int m) {
  return boost::math::cyl_bessel_j_zero(order, m);
}

inline double tgamma(double x) { return boost::math::tgamma(x); }
inline double lgamma(double x) { return boost::math::lgamma(x); }

/// m-th zero of Ai (negative), m >= 1.
inline double airy_zero(int m) { return boost::math::airy_ai_zero<double>(m); }

/// Ai(x) from its Maclaurin series, Ai = c1 f - c2 g. Good to ~1e-13 for
/// |x| <= 3.
inline double airy_ai_series(double x) {
  constexpr double c1 = 0.355028053887817239260;
  constexpr double c2 = 0.258819403792806798405;
  const double x3 = x * x * x;
  double f_term = 1.0;
  double g_term = x;
  double f = f_term;
  double g = g_term;
  for (int k = 1; k < 200; ++k) {
    f_term *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
    g_term *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
    f += f_term;
    g += g_term;
    if (std::abs(f_term) + std::abs(g_term) < 1e-18 * (std::abs(f) + std::abs(g))) break;
  }
  return c1 * f - c2 * g;
}

/// First zero of Ai by bisection on the series.
inline double airy_first_zero_series() {
  double lo = -2.5;
  double hi = -2.0;
  double f_lo = airy_ai_series(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = airy_ai_series(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// McMahon expansion of the m-th zero of J_order, through (8 beta)^-5.
inline double mcmahon_zero(double order, int m) {
  const double mu = 4.0 * order * order;
  const double beta = (m + 0.5 * order - 0.25) * pi();
  const double e = 8.0 * beta;
  return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * std::pow(e, 5));
}

// ---- exactly solvable spectra, reduced units (hbar = 1, 2m = 1)

/// Hydrogen-like V = -1/r with the flux: -1 / (4 (n + gamma + 1)^2).
inline double coulomb_exact(int n, double gamma) {
  const double big_n = n + gamma + 1.0;
  return -1.0 / (4.0 * big_n * big_n);
}

/// V = lambda r^2: hbar omega = 2 sqrt(lambda), E = (2n + gamma + 3/2) hbar omega.
inline double oscillator_exact(int n, double gamma, double lambda) {
  return (2.0 * n + gamma + 1.5) * 2.0 * std::sqrt(lambda);
}

inline double gamma_of(int q, int k, double mu0) { return q + std::abs(k + mu0); }

}  // namespace ref
