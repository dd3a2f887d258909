#pragma once

#include <variant>

#include "model.hpp"

namespace abflux {

/// The gamma- and nu-dependent constant the semiclassical rule is built with:
///   -2 < nu < 0 : (2 gamma + nu + 3) / (2 (nu + 2))
///   nu > 0      : gamma / 2 + 3/4   (the same rule carried through the duality map)
///   well        : gamma / 2 + 1
struct PaperConstant {};

/// Explicit matching override: the gamma-dependent part of the default constant
/// is kept and the fixed part is replaced by the Maslov value.
struct MaslovOverride {
  MaslovConstant maslov = MaslovConstant::WallWall;
};

struct QuantizationSetup {
  PotentialSpec potential;
  double gamma = 0.0;
  std::variant<PaperConstant, MaslovOverride> constant = PaperConstant{};
  double quadrature_tolerance = 1e-12;
  double root_tolerance = 1e-12;
};

/// Right-hand constant c in  integral_0^{r_c} sqrt(E - V) dr = (n + c) pi.
double quantization_constant(const QuantizationSetup& setup);

/// Classical turning point r_c with V(r_c) = E (the radius for the well).
/// E must lie in the bound range: E < 0 for -2 < nu < 0, E > 0 otherwise.
double turning_point(double energy, const PotentialSpec& potential);

/// integral_0^{r_c} sqrt(E - V(r)) dr by tanh-sinh quadrature.
double action_integral_numeric(double energy, const PotentialSpec& potential,
                               double rel_tol = 1e-12);

/// Beta-function closed form of the same integral for lambda, E < 0 and
/// -2 < nu < 0.
double action_integral_closed(double energy, double lambda, double nu);

/// Energy of radial level n from the quantization rule, found by root-solving
/// the numeric action. Throws ConvergenceError if bracketing or refinement
/// fails.
double quantize_energy(const QuantizationSetup& setup, int n);

}  // namespace abflux
