#include "closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "serialization.hpp"
#include "special_functions.hpp"

namespace abflux {
namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void check_quantum(double n, double gamma, const char* where) {
  if (!std::isfinite(n) || !std::isfinite(gamma)) {
    throw DomainError(std::string(where) + ": quantum numbers must be finite");
  }
}

// Raw a37 evaluator; gamma may be negative (duality intermediate) as long as
// the shifted quantum number stays positive.
double negative_power_raw(double n, double gamma, double lambda, double nu) {
  const double shifted = n + (2.0 * gamma + nu + 3.0) / (2.0 * nu + 4.0);
  if (!(shifted > 0.0)) {
    throw DomainError("negative power: n + (2 gamma + nu + 3)/(2 nu + 4) must be positive");
  }
  const double bracket = 2.0 * std::abs(nu) * kSqrtPi * shifted *
                         gamma_ratio(1.0 - 1.0 / nu, -1.0 / nu - 0.5);
  return -std::pow(std::abs(lambda), 2.0 / (nu + 2.0)) *
         std::pow(bracket, 2.0 * nu / (nu + 2.0));
}

double positive_power_raw(double n, double gamma, double lambda, double nu) {
  const double shifted = n + 0.5 * gamma + 0.75;
  if (!(shifted > 0.0)) {
    throw DomainError("positive power: n + gamma/2 + 3/4 must be positive");
  }
  const double bracket =
      2.0 * nu * kSqrtPi * shifted * gamma_ratio(1.0 / nu + 1.5, 1.0 / nu);
  return std::pow(lambda, 2.0 / (nu + 2.0)) * std::pow(bracket, 2.0 * nu / (nu + 2.0));
}

void check_negative_branch(double lambda, double nu) {
  if (!(lambda < 0.0) || !(nu > -2.0 && nu < 0.0)) {
    throw DomainError("negative power spectrum requires lambda < 0 and -2 < nu < 0");
  }
}

void check_positive_branch(double lambda, double nu) {
  if (!(lambda > 0.0) || !(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError("positive power spectrum requires lambda > 0 and nu > 0");
  }
}

void check_level(int n, double gamma, const char* where) {
  if (n < 0) throw DomainError(std::string(where) + ": n must be >= 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(where) + ": gamma must be finite and >= 0");
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::ClosedForm: return "closed_form";
    case Method::ActionRoot: return "action_root";
    case Method::ExactOracle: return "exact_oracle";
  }
  return "closed_form";
}

Method parse_method(std::string_view name) {
  if (name == "closed_form") return Method::ClosedForm;
  if (name == "action_root") return Method::ActionRoot;
  if (name == "exact_oracle") return Method::ExactOracle;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

double energy_negative_power(int n, double gamma, double lambda, double nu) {
  check_level(n, gamma, "energy_negative_power");
  check_negative_branch(lambda, nu);
  return negative_power_raw(n, gamma, lambda, nu);
}

double energy_positive_power(int n, double gamma, double lambda, double nu) {
  check_level(n, gamma, "energy_positive_power");
  check_positive_branch(lambda, nu);
  return positive_power_raw(n, gamma, lambda, nu);
}

double energy_coulomb(int n, int q, int k, double mu0) {
  if (n < 0) throw DomainError("energy_coulomb: n must be >= 0");
  const double principal = n + effective_gamma(q, k, mu0) + 1.0;
  return -1.0 / (4.0 * principal * principal);
}

double energy_oscillator(int n, double gamma) {
  check_level(n, gamma, "energy_oscillator");
  return 2.0 * n + gamma + 1.5;
}

double energy_well_semiclassical(int n, double gamma, double radius) {
  check_level(n, gamma, "energy_well_semiclassical");
  if (!(radius > 0.0)) throw DomainError("energy_well_semiclassical: radius must be > 0");
  const double shifted = n + 0.5 * gamma + 1.0;
  return shifted * shifted;
}

double closed_form_energy(const PotentialSpec& potential, int n, double gamma) {
  check_level(n, gamma, "closed_form_energy");
  return closed_form_energy_continuous(potential, n, gamma);
}

double closed_form_energy_continuous(const PotentialSpec& potential, double n, double gamma) {
  check_quantum(n, gamma, "closed_form_energy");
  if (potential.is_well()) {
    const double a = potential.well_params().radius;
    const double shifted = n + 0.5 * gamma + 1.0;
    if (!(shifted > 0.0)) throw DomainError("well: n + gamma/2 + 1 must be positive");
    return std::numbers::pi * std::numbers::pi / (a * a) * shifted * shifted;
  }
  const auto& p = potential.power_law_params();
  return p.nu < 0.0 ? negative_power_raw(n, gamma, p.lambda, p.nu)
                    : positive_power_raw(n, gamma, p.lambda, p.nu);
}

double energy_positive_power_via_duality(int n, double gamma, double lambda, double nu) {
  check_level(n, gamma, "energy_positive_power_via_duality");
  check_positive_branch(lambda, nu);
  // The dual energy depends only on lambda; the unknown E sits in the dual
  // coupling lambda' = -E (nu'/nu)^2.
  const DualParameters dual = duality_map(nu, 0.0, lambda, gamma);
  const double nu_d = dual.nu;
  const double shifted = n + (2.0 * dual.gamma + nu_d + 3.0) / (2.0 * nu_d + 4.0);
  const double bracket = 2.0 * std::abs(nu_d) * kSqrtPi * shifted *
                         gamma_ratio(1.0 - 1.0 / nu_d, -1.0 / nu_d - 0.5);
  // |E'| = |lambda'|^{2/(nu'+2)} bracket^{2nu'/(nu'+2)}  solved for |lambda'|
  const double coupling =
      std::pow(std::abs(dual.energy), 0.5 * (nu_d + 2.0)) * std::pow(bracket, -nu_d);
  const double ratio = nu_d / nu;
  return coupling / (ratio * ratio);
}

namespace {

PotentialSpec output_potential(const PotentialSpec& p) {
  try {
    if (p.is_well()) return PotentialSpec::infinite_well(round_to_output(p.well_params().radius));
    const auto& pl = p.power_law_params();
    return PotentialSpec::power_law(round_to_output(pl.lambda), round_to_output(pl.nu));
  } catch (const DomainError&) {
    return p;  // rounding pushed a parameter onto a range boundary
  }
}

}  // namespace

SpectrumTable spectrum_table(const PotentialSpec& potential, double mu0, const GridRange& range,
                             const UnitScale& unit, unsigned workers) {
  if (range.n_max < 0 || range.q_max < 0) {
    throw DomainError("spectrum_table: n_max and q_max must be >= 0");
  }
  if (range.k_lo > range.k_hi) {
    throw DomainError("spectrum_table: empty k range");
  }
  if (!std::isfinite(mu0)) throw DomainError("spectrum_table: mu0 must be finite");

  const std::size_t nq = static_cast<std::size_t>(range.q_max) + 1;
  const std::size_t nk = static_cast<std::size_t>(range.k_hi - range.k_lo) + 1;
  const std::size_t count = (static_cast<std::size_t>(range.n_max) + 1) * nq * nk;

  // Tables hold what they print, so a written table reads back identical.
  SpectrumTable table{output_potential(potential), round_to_output(mu0),
                      {unit.label, round_to_output(unit.factor)}, Method::ClosedForm, {}};
  table.rows = parallel_map<SpectrumRow>(count, workers, [&](std::size_t index) {
    SpectrumRow row;
    row.n = static_cast<int>(index / (nq * nk));
    row.q = static_cast<int>((index / nk) % nq);
    row.k = range.k_lo + static_cast<int>(index % nk);
    const double gamma = effective_gamma(row.q, row.k, mu0);
    row.gamma = round_to_output(gamma);
    row.energy = round_to_output(unit.to_display(closed_form_energy(potential, row.n, gamma)));
    return row;
  });
  return table;
}

}  // namespace abflux
