#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "errors.hpp"

namespace abflux {
namespace {

constexpr double kStep = 1e-4;
constexpr double kMinFluxCombination = 1e-3;

void check_exponent(double nu) {
  if (std::isnan(nu) || nu <= -2.0 || nu == 0.0 || nu == -INFINITY) {
    throw DomainError("nu must lie in (-2, 0) or (0, inf]");
  }
}

bool is_marginal(double nu) { return std::abs(nu - 2.0) <= 1e-12; }

int sign_of(double x, double zero_band) {
  if (std::abs(x) <= zero_band) return 0;
  return x > 0.0 ? 1 : -1;
}

}  // namespace

std::string_view curvature_name(Curvature c) {
  switch (c) {
    case Curvature::BendsDown: return "bends_down";
    case Curvature::Linear: return "linear";
    case Curvature::BendsUp: return "bends_up";
  }
  return "linear";
}

Variable parse_variable(std::string_view name) {
  if (name == "n") return Variable::N;
  if (name == "q") return Variable::Q;
  if (name == "kmu") return Variable::Kmu;
  throw DomainError("unknown derivative variable '" + std::string(name) + "'");
}

double spectral_derivative(const PotentialSpec& potential, double mu0, const SpectralPoint& point,
                           Variable which, int order) {
  if (order != 1 && order != 2) throw DomainError("spectral_derivative: order must be 1 or 2");
  if (!(point.n >= 0.0) || !(point.q >= 0.0) || !std::isfinite(point.k) || !std::isfinite(mu0)) {
    throw DomainError("spectral_derivative: need n >= 0, q >= 0 and finite k, mu0");
  }
  const double flux = std::abs(point.k + mu0);
  if (which == Variable::Kmu && flux < kMinFluxCombination) {
    throw DomainError("spectral_derivative: |k+mu0| must be >= 1e-3 to differentiate by it");
  }
  const double gamma = point.q + flux;
  // Both q and |k+mu0| enter only through gamma.
  auto energy_at = [&](double shift) {
    return which == Variable::N
               ? closed_form_energy_continuous(potential, point.n + shift, gamma)
               : closed_form_energy_continuous(potential, point.n, gamma + shift);
  };
  if (order == 1) return (energy_at(kStep) - energy_at(-kStep)) / (2.0 * kStep);
  return (energy_at(kStep) - 2.0 * energy_at(0.0) + energy_at(-kStep)) / (kStep * kStep);
}

double spectral_mixed_derivative(const PotentialSpec& potential, double mu0,
                                 const SpectralPoint& point) {
  if (!(point.n >= 0.0) || !(point.q >= 0.0)) {
    throw DomainError("spectral_mixed_derivative: need n >= 0, q >= 0");
  }
  const double flux = std::abs(point.k + mu0);
  if (flux < kMinFluxCombination) {
    throw DomainError("spectral_mixed_derivative: |k+mu0| must be >= 1e-3");
  }
  const double gamma = point.q + flux;
  auto e = [&](double dn, double dg) {
    return closed_form_energy_continuous(potential, point.n + dn, gamma + dg);
  };
  return (e(kStep, kStep) - e(kStep, -kStep) - e(-kStep, kStep) + e(-kStep, -kStep)) /
         (4.0 * kStep * kStep);
}

Curvature tendency_classify(double nu) {
  check_exponent(nu);
  if (is_marginal(nu)) return Curvature::Linear;
  return nu > 2.0 ? Curvature::BendsUp : Curvature::BendsDown;
}

std::array<double, 3> derivative_ratios(double nu) {
  check_exponent(nu);
  // E depends on n + gamma/2 + const for nu > 0 (and the well), on
  // n + gamma/(nu+2) + const for -2 < nu < 0.
  if (nu > 0.0) return {2.0, 2.0, 1.0};
  return {nu + 2.0, nu + 2.0, 1.0};
}

int flux_slope_effect(double nu) {
  check_exponent(nu);
  if (is_marginal(nu)) return 0;
  return nu > 2.0 ? 1 : -1;
}

TendencyReport tendency_report(const PotentialSpec& potential, double mu0, int k, int n_max,
                               int q_max) {
  if (n_max < 2 || q_max < 2) {
    throw DomainError("tendency_report: need n_max >= 2 and q_max >= 2 for second differences");
  }
  TendencyReport report;
  report.nu = potential.exponent();
  report.curvature = tendency_classify(report.nu);

  const SpectralPoint origin{0.0, 0.0, static_cast<double>(k)};
  const double flux = std::abs(k + mu0);
  std::array<double, 3> first{};
  first[0] = spectral_derivative(potential, mu0, origin, Variable::N, 1);
  first[1] = spectral_derivative(potential, mu0, origin, Variable::Q, 1);
  // Away from k+mu0 = 0 the |k+mu0| derivative exists; at the kink it equals
  // the q derivative from the right.
  first[2] = flux >= kMinFluxCombination
                 ? spectral_derivative(potential, mu0, origin, Variable::Kmu, 1)
                 : first[1];
  for (int i = 0; i < 3; ++i) report.first_derivative_signs[i] = sign_of(first[i], 0.0);
  report.ratios = {first[0] / first[1], first[0] / first[2], first[1] / first[2]};

  const SpectralPoint shifted{0.0, 0.0, k + (flux >= kMinFluxCombination ? 0.0 : 0.5)};
  const double mixed = spectral_mixed_derivative(potential, mu0, shifted);
  const double scale = std::abs(first[0]) + std::abs(first[1]);
  report.flux_slope_sign = sign_of(mixed, 1e-6 * scale);

  // Second differences along n and q on the integer grid.
  double magnitude = 0.0;
  std::vector<double> diffs;
  for (int q = 0; q <= q_max; ++q) {
    for (int n = 1; n < n_max; ++n) {
      const double g = effective_gamma(q, k, mu0);
      const double d2 = closed_form_energy(potential, n + 1, g) -
                        2.0 * closed_form_energy(potential, n, g) +
                        closed_form_energy(potential, n - 1, g);
      diffs.push_back(d2);
      magnitude = std::max(magnitude, std::abs(closed_form_energy(potential, n, g)));
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int q = 1; q < q_max; ++q) {
      auto e = [&](int qq) { return closed_form_energy(potential, n, effective_gamma(qq, k, mu0)); };
      diffs.push_back(e(q + 1) - 2.0 * e(q) + e(q - 1));
    }
  }
  const double band = 1e-10 * std::max(magnitude, 1e-300);
  const int expected = report.curvature == Curvature::Linear   ? 0
                       : report.curvature == Curvature::BendsUp ? 1
                                                                : -1;
  report.curvature_consistent = std::all_of(
      diffs.begin(), diffs.end(), [&](double d) { return sign_of(d, band) == expected; });
  return report;
}

}  // namespace abflux
