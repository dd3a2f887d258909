#pragma once

#include <utility>

namespace abflux {

/// Gamma function for real x in (0, ~171.6]. Throws DomainError for x <= 0,
/// NaN, or when the result overflows a double.
double gamma(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0, evaluated in log space when either
/// factor would overflow.
double gamma_ratio(double a, double b);

/// Bessel function of the first kind J_order(x), order >= 0, x >= 0.
double bessel_j(double order, double x);

/// The m-th positive zero (m >= 1) of J_order.
double bessel_j_zero(double order, int m);

namespace detail {

// Evaluation branches of bessel_j, exposed so tests can check that they agree
// where their domains overlap. Each returns {J_order(x), J_{order+1}(x)}.
std::pair<double, double> bessel_j_series(double order, double x);
std::pair<double, double> bessel_j_backward(double order, double x);
std::pair<double, double> bessel_j_asymptotic(double order, double x);

}  // namespace detail
}  // namespace abflux
