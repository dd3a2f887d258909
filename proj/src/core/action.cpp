#include "action.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "closed_form.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "root_finding.hpp"
#include "special_functions.hpp"

namespace abflux {
namespace {

void check_bound_energy(double energy, const PotentialSpec& potential) {
  if (!std::isfinite(energy)) throw DomainError("energy must be finite");
  if (potential.binds_below_zero()) {
    if (!(energy < 0.0)) {
      throw DomainError("bound energies of -2<nu<0 potentials are negative, got " +
                        std::to_string(energy));
    }
  } else if (!(energy > 0.0)) {
    throw DomainError("bound energies of this potential are positive, got " +
                      std::to_string(energy));
  }
}

// Weight of gamma in the default constant.
double gamma_weight(const PotentialSpec& potential) {
  if (potential.is_well()) return 0.5;
  const double nu = potential.power_law_params().nu;
  return nu < 0.0 ? 1.0 / (nu + 2.0) : 0.5;
}

}  // namespace

double quantization_constant(const QuantizationSetup& setup) {
  const double gamma = setup.gamma;
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("quantization: gamma must be finite and >= 0");
  }
  if (const auto* override = std::get_if<MaslovOverride>(&setup.constant)) {
    return gamma_weight(setup.potential) * gamma + maslov_value(override->maslov);
  }
  if (setup.potential.is_well()) return 0.5 * gamma + 1.0;
  const double nu = setup.potential.power_law_params().nu;
  if (nu < 0.0) return (2.0 * gamma + nu + 3.0) / (2.0 * (nu + 2.0));
  return 0.5 * gamma + 0.75;
}

double turning_point(double energy, const PotentialSpec& potential) {
  check_bound_energy(energy, potential);
  if (potential.is_well()) return potential.well_params().radius;
  const auto& p = potential.power_law_params();
  return std::pow(energy / p.lambda, 1.0 / p.nu);
}

double action_integral_numeric(double energy, const PotentialSpec& potential, double rel_tol) {
  const double r_c = turning_point(energy, potential);
  if (potential.is_well()) {
    auto flat = [energy](double, double, double) { return std::sqrt(energy); };
    return integrate_tanh_sinh(flat, 0.0, r_c, rel_tol).value;
  }
  const double nu = potential.power_law_params().nu;
  // E - lambda r^nu = E (1 - (r/r_c)^nu), since lambda r_c^nu = E. The log of
  // r/r_c is taken from whichever endpoint distance is small, so the sqrt zero
  // at r_c and the r^{nu/2} blow-up at 0 are resolved without cancellation.
  auto integrand = [energy, nu, r_c](double, double from_origin, double from_turning) {
    const double log_ratio = from_turning < from_origin ? std::log1p(-from_turning / r_c)
                                                        : std::log(from_origin / r_c);
    const double x = nu * log_ratio;  // (r/r_c)^nu = e^x
    if (x > 1.0) {
      // Attractive branch near the origin: E - V = |E| (e^x - 1), kept in a
      // form that does not overflow before the quadrature weight vanishes.
      const double value = std::sqrt(-energy) * std::exp(0.5 * x) * std::sqrt(-std::expm1(-x));
      return std::isfinite(value) ? value : 0.0;
    }
    return std::sqrt(std::max(0.0, -energy * std::expm1(x)));
  };
  return integrate_tanh_sinh(integrand, 0.0, r_c, rel_tol).value;
}

double action_integral_closed(double energy, double lambda, double nu) {
  if (!(lambda < 0.0) || !(nu > -2.0 && nu < 0.0) || !(energy < 0.0)) {
    throw DomainError("action_integral_closed requires E < 0, lambda < 0 and -2 < nu < 0");
  }
  return -(2.0 / nu) * std::pow(energy / lambda, 1.0 / nu) * std::sqrt(-energy) *
         (std::sqrt(std::numbers::pi) / 4.0) * gamma_ratio(-1.0 / nu - 0.5, 1.0 - 1.0 / nu);
}

double quantize_energy(const QuantizationSetup& setup, int n) {
  if (n < 0) throw DomainError("quantize_energy: n must be >= 0");
  if (!(setup.quadrature_tolerance > 0.0) || !(setup.root_tolerance > 0.0)) {
    throw DomainError("quantize_energy: tolerances must be positive");
  }
  const double target = (n + quantization_constant(setup)) * std::numbers::pi;
  const PotentialSpec& potential = setup.potential;
  auto mismatch = [&](double energy) {
    return action_integral_numeric(energy, potential, setup.quadrature_tolerance) - target;
  };

  // The action grows monotonically with E on the bound range, so expanding
  // geometrically away from the closed-form estimate brackets the root.
  const double guess = closed_form_energy(potential, n, setup.gamma);
  const bool negative = potential.binds_below_zero();
  auto lower = [negative](double e) { return negative ? e * 2.0 : e * 0.5; };
  auto higher = [negative](double e) { return negative ? e * 0.5 : e * 2.0; };

  double lo = guess;
  double hi = guess;
  double f_lo = mismatch(guess);
  double f_hi = f_lo;
  constexpr int kMaxExpansions = 200;
  int expansions = 0;
  while (f_lo > 0.0) {
    if (++expansions > kMaxExpansions) throw ConvergenceError("quantize_energy: no lower bracket");
    hi = lo;
    f_hi = f_lo;
    lo = lower(lo);
    f_lo = mismatch(lo);
  }
  while (f_hi < 0.0) {
    if (++expansions > kMaxExpansions) throw ConvergenceError("quantize_energy: no upper bracket");
    lo = hi;
    f_lo = f_hi;
    hi = higher(hi);
    f_hi = mismatch(hi);
  }
  return find_root_bracketed(mismatch, lo, hi, f_lo, f_hi, setup.root_tolerance);
}

}  // namespace abflux
