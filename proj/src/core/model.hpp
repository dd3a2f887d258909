#pragma once

#include <string>
#include <string_view>
#include <variant>

// Reduced units throughout: hbar = 1 and 2m = 1, so the radial equation is
//   u'' + (E - V(r) - gamma (gamma + 1) / r^2) u = 0.
// The flux enters only through the dimensionless mu0 (mu0 = -2eg/(hbar c),
// flux Phi = 4 pi g); its geometry is not modelled.

namespace abflux {

/// V(r) = lambda r^nu with (lambda < 0, -2 < nu < 0) or (lambda > 0, nu > 0).
struct PowerLaw {
  double lambda;
  double nu;
};

/// V = 0 for r < radius, infinite outside.
struct InfiniteWell {
  double radius;
};

class PotentialSpec {
 public:
  /// Validating constructors; throw DomainError outside the allowed ranges.
  static PotentialSpec power_law(double lambda, double nu);
  static PotentialSpec infinite_well(double radius);

  bool is_power_law() const { return std::holds_alternative<PowerLaw>(shape_); }
  bool is_well() const { return std::holds_alternative<InfiniteWell>(shape_); }

  const PowerLaw& power_law_params() const;
  const InfiniteWell& well_params() const;

  /// Exponent nu; +infinity for the well.
  double exponent() const;

  /// V(r); +infinity outside the well.
  double value_at(double r) const;

  /// Energies of bound states are negative for the attractive negative-power
  /// branch and positive otherwise.
  bool binds_below_zero() const;

  std::string describe() const;

  friend bool operator==(const PotentialSpec& a, const PotentialSpec& b);

 private:
  explicit PotentialSpec(std::variant<PowerLaw, InfiniteWell> shape) : shape_(shape) {}
  std::variant<PowerLaw, InfiniteWell> shape_;
};

bool operator==(const PowerLaw& a, const PowerLaw& b);
bool operator==(const InfiniteWell& a, const InfiniteWell& b);

/// Radial quantum number n, angular q, magnetic k and the flux parameter mu0.
struct FluxQuantumNumbers {
  int n = 0;
  int q = 0;
  int k = 0;
  double mu0 = 0.0;

  double gamma() const;
};

/// gamma = q + |k + mu0|, the fractional angular momentum.
double effective_gamma(int q, int k, double mu0);

/// Parameters of the negative-power problem dual to a positive-power one.
/// `gamma` may be negative; it is an algebraic intermediate, not a physical
/// angular momentum.
struct DualParameters {
  double nu;
  double energy;
  double lambda;
  double gamma;
};

/// Maps (nu > 0, E, lambda, gamma) to the dual negative-power problem.
DualParameters duality_map(double nu, double energy, double lambda, double gamma);

/// Inverse exponent map; dual_exponent(dual_exponent(nu)) == nu.
double dual_exponent(double nu);

enum class Boundary { Wall, Smooth };

/// Additive constant in the closed-orbit quantization rule.
enum class MaslovConstant { SmoothSmooth, SmoothWall, WallWall };

MaslovConstant maslov_constant(Boundary left, Boundary right);
double maslov_value(MaslovConstant constant);

/// Display unit: display energy = reduced energy * factor.
struct UnitScale {
  std::string label;
  double factor = 1.0;

  double to_display(double reduced_energy) const { return reduced_energy * factor; }
};

enum class UnitPreset { Reduced, Fig1, Fig2a, Fig2b, Fig2c, Fig2d };

/// Resolves a preset against the potential. The figure presets only make
/// sense for their model (Coulomb nu=-1, linear nu=1, oscillator nu=2, well)
/// and throw DomainError otherwise.
UnitScale unit_scale(UnitPreset preset, const PotentialSpec& potential);

UnitPreset parse_unit_preset(std::string_view name);
std::string_view unit_preset_name(UnitPreset preset);

/// The figure preset matching the potential, or Reduced if there is none.
UnitPreset default_figure_preset(const PotentialSpec& potential);

}  // namespace abflux
