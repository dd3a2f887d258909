#pragma once

#include <array>
#include <string_view>

#include "model.hpp"

namespace abflux {

/// Which quantum number a derivative is taken with respect to. Kmu is the
/// flux combination |k + mu0|, treated as one variable.
enum class Variable { N, Q, Kmu };

enum class Curvature { BendsDown, Linear, BendsUp };

std::string_view curvature_name(Curvature c);
Variable parse_variable(std::string_view name);

/// Point in (n, q, k) space with the quantum numbers promoted to reals.
struct SpectralPoint {
  double n = 0.0;
  double q = 0.0;
  double k = 0.0;
};

/// Central-difference derivative (step 1e-4) of the closed-form energy, in
/// reduced units. order is 1 or 2. Differentiating with respect to Kmu
/// requires |k + mu0| >= 1e-3.
double spectral_derivative(const PotentialSpec& potential, double mu0, const SpectralPoint& point,
                           Variable which, int order);

/// d^2 E / (dn d|k+mu0|) by a central mixed difference.
double spectral_mixed_derivative(const PotentialSpec& potential, double mu0,
                                 const SpectralPoint& point);

/// Shape of E along any quantum number; nu may be +infinity (the well).
Curvature tendency_classify(double nu);

/// (dE/dn : dE/dq, dE/dn : dE/d|k+mu0|, dE/dq : dE/d|k+mu0|).
std::array<double, 3> derivative_ratios(double nu);

/// Sign of d^2 E / (dn d|k+mu0|): -1, 0 or +1.
int flux_slope_effect(double nu);

struct TendencyReport {
  double nu = 0.0;
  Curvature curvature = Curvature::Linear;
  std::array<int, 3> first_derivative_signs{};  // n, q, |k+mu0|
  std::array<double, 3> ratios{};               // measured, same layout as derivative_ratios
  int flux_slope_sign = 0;                      // measured
  bool curvature_consistent = false;  // grid second differences agree with `curvature`
};

/// Classifies the potential and checks the classification against finite
/// differences of the closed form on the integer grid n <= n_max, q <= q_max
/// at fixed k. Derivatives are measured at (n, q) = (0, 0).
TendencyReport tendency_report(const PotentialSpec& potential, double mu0, int k, int n_max,
                               int q_max);

}  // namespace abflux
