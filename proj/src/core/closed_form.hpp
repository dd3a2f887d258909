#pragma once

#include <string_view>
#include <vector>

#include "model.hpp"

namespace abflux {

enum class Method { ClosedForm, ActionRoot, ExactOracle };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

/// One bound-state energy. `energy` is in reduced units; `unit` says how to
/// display it.
struct EnergyLevel {
  int n = 0;
  int q = 0;
  int k = 0;
  double gamma = 0.0;
  double energy = 0.0;
  Method method = Method::ClosedForm;
  UnitScale unit{"reduced", 1.0};

  double display_energy() const { return unit.to_display(energy); }
};

// Semiclassical spectra in reduced units. Throw DomainError outside the
// stated parameter ranges.

/// lambda < 0, -2 < nu < 0:
///   E = -|lambda|^{2/(nu+2)} [2|nu| sqrt(pi) (n + (2 gamma+nu+3)/(2nu+4))
///        Gamma(1-1/nu) / Gamma(-1/nu-1/2)]^{2nu/(nu+2)}
double energy_negative_power(int n, double gamma, double lambda, double nu);

/// lambda > 0, nu > 0:
///   E = lambda^{2/(nu+2)} [2 nu sqrt(pi) (n + gamma/2 + 3/4)
///        Gamma(1/nu+3/2) / Gamma(1/nu)]^{2nu/(nu+2)}
double energy_positive_power(int n, double gamma, double lambda, double nu);

/// Pure Coulomb (lambda = -1): -1 / (4 (n + q + |k+mu0| + 1)^2).
double energy_coulomb(int n, int q, int k, double mu0);

/// Oscillator in units of hbar*omega: 2n + gamma + 3/2.
double energy_oscillator(int n, double gamma);

/// Infinite well in units of hbar^2 pi^2 / (2 m a^2): (n + gamma/2 + 1)^2.
double energy_well_semiclassical(int n, double gamma, double radius);

/// Semiclassical level of any supported potential, in reduced units.
double closed_form_energy(const PotentialSpec& potential, int n, double gamma);

/// Same formulas with n and gamma continuous. Only requires the quantity
/// raised to the power to stay positive; used for derivative analysis.
double closed_form_energy_continuous(const PotentialSpec& potential, double n, double gamma);

/// Positive-power level computed the long way round: map to the dual
/// negative-power problem, invert the negative-power closed form for the
/// dual coupling, and map back. Agrees with energy_positive_power.
double energy_positive_power_via_duality(int n, double gamma, double lambda, double nu);

struct SpectrumRow {
  int n = 0;
  int q = 0;
  int k = 0;
  double gamma = 0.0;
  double energy = 0.0;  // in the table's display unit
};

/// Grid of levels over (n, q, k), sorted lexicographically.
struct SpectrumTable {
  PotentialSpec potential = PotentialSpec::infinite_well(1.0);
  double mu0 = 0.0;
  UnitScale unit{"reduced", 1.0};
  Method method = Method::ClosedForm;
  std::vector<SpectrumRow> rows;
};

struct GridRange {
  int n_max = 0;
  int q_max = 0;
  int k_lo = 0;
  int k_hi = 0;
};

/// Closed-form levels for every (n, q, k) with 0 <= n <= n_max,
/// 0 <= q <= q_max, k_lo <= k <= k_hi.
SpectrumTable spectrum_table(const PotentialSpec& potential, double mu0, const GridRange& range,
                             const UnitScale& unit = {"reduced", 1.0}, unsigned workers = 1);

}  // namespace abflux
