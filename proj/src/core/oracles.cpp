#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "special_functions.hpp"

namespace abflux {

std::vector<double> well_exact_spectrum(double gamma, double radius, int count) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("well_exact_spectrum: gamma must be finite and >= 0");
  }
  if (!(radius > 0.0)) throw DomainError("well_exact_spectrum: radius must be > 0");
  if (count < 1) throw DomainError("well_exact_spectrum: count must be >= 1");
  std::vector<double> levels;
  levels.reserve(count);
  for (int m = 1; m <= count; ++m) {
    const double zero = bessel_j_zero(gamma + 0.5, m) / std::numbers::pi;
    levels.push_back(zero * zero);
  }
  return levels;
}

namespace {

// Log-spaced grid with the E-independent parts of the Numerov coefficient.
class LogGrid {
 public:
  LogGrid(const PowerLaw& p, double gamma, double r_min, double r_max, double step,
          const ShootingConfig& cfg)
      : gamma_term_((gamma + 0.5) * (gamma + 0.5)) {
    const double span = std::log(r_max / r_min);
    const int intervals =
        std::max(cfg.min_points, static_cast<int>(std::ceil(span / step)));
    step_ = span / intervals;
    r_sq_.resize(intervals + 1);
    r_sq_potential_.resize(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
      const double r = r_min * std::exp(i * step_);
      r_sq_[i] = r * r;
      r_sq_potential_[i] = r * r * p.lambda * std::pow(r, p.nu);
    }
    start_ratio_ = std::exp(step_ * (gamma + 0.5));
  }

  int points() const { return static_cast<int>(r_sq_.size()); }

  // Sign changes of the outward solution on (r_min, r_max].
  int count_nodes(double energy) const {
    const double h2 = step_ * step_ / 12.0;
    auto coeff = [&](int i) { return 1.0 - h2 * (r_sq_potential_[i] - energy * r_sq_[i] + gamma_term_); };
    double w_prev = 1.0;  // w ~ r^{gamma+1/2} near the origin
    double w = start_ratio_;
    double c_prev = coeff(0);
    double c = coeff(1);
    int nodes = 0;
    for (int i = 1; i + 1 < points(); ++i) {
      const double c_next = coeff(i + 1);
      const double w_next = ((12.0 - 10.0 * c) * w - c_prev * w_prev) / c_next;
      if ((w_next < 0.0) != (w < 0.0) || w_next == 0.0) ++nodes;
      w_prev = w;
      w = w_next;
      c_prev = c;
      c = c_next;
      if (std::abs(w) > 1e200) {
        w *= 1e-200;
        w_prev *= 1e-200;
      }
    }
    return nodes;
  }

 private:
  double gamma_term_;
  double step_ = 0.0;
  double start_ratio_ = 1.0;
  std::vector<double> r_sq_;
  std::vector<double> r_sq_potential_;
};

struct BoxSolve {
  bool bound = false;  // level found below the continuum threshold
  double energy = 0.0;
  int nodes = 0;
  int points = 0;
};

// Where g = r^2 (V - E) + (gamma + 1/2)^2 is positive the Numerov coefficient
// 1 - h^2 g / 12 must stay positive or the recurrence flips sign and fakes
// nodes. Keep it at or above 1/2 for energies down to -e_abs.
double stable_step(const PowerLaw& p, double gamma, double r_max, double e_abs,
                   const ShootingConfig& cfg) {
  const double barrier =
      p.nu < 0.0 ? e_abs * r_max * r_max : p.lambda * std::pow(r_max, p.nu + 2.0);
  return std::min(cfg.step, std::sqrt(6.0 / (barrier + (gamma + 0.5) * (gamma + 0.5))));
}

BoxSolve solve_in_box(const PowerLaw& p, double gamma, int n, double r_min, double r_max,
                      const ShootingConfig& cfg) {
  BoxSolve out;
  const double scale = std::pow(std::abs(p.lambda), 2.0 / (p.nu + 2.0));
  auto make_grid = [&](double e_abs) {
    return LogGrid(p, gamma, r_min, r_max, stable_step(p, gamma, r_max, e_abs, cfg), cfg);
  };

  // Confining levels are positive; attractive ones lie below zero and above
  // some multiple of the natural energy scale.
  double lo = 0.0;
  double hi = 0.0;
  std::optional<LogGrid> grid;
  if (p.nu < 0.0) {
    lo = -scale;
    for (int i = 0;; ++i) {
      if (i > 60) throw ConvergenceError("shoot: no lower energy bracket");
      grid.emplace(make_grid(std::abs(lo)));
      if (i == 0 && grid->count_nodes(0.0) < n + 1) {
        out.points = grid->points();
        return out;  // level not bound in this box
      }
      if (grid->count_nodes(lo) <= n) break;
      lo *= 2.0;
    }
  } else {
    hi = scale;
    for (int i = 0;; ++i) {
      if (i > 60) throw ConvergenceError("shoot: no upper energy bracket");
      grid.emplace(make_grid(hi));
      if (grid->count_nodes(hi) >= n + 1) break;
      hi *= 2.0;
    }
  }
  out.points = grid->points();

  int iterations = 0;
  while (hi - lo > cfg.energy_tolerance) {
    if (++iterations > cfg.max_bisections) {
      throw ConvergenceError("shoot: bisection exceeded " + std::to_string(cfg.max_bisections) +
                             " iterations");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (grid->count_nodes(mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.nodes = grid->count_nodes(lo);
  if (out.nodes != n || grid->count_nodes(hi) < n + 1) {
    throw ConvergenceError("shoot: node count of the converged level does not match n");
  }
  out.bound = true;
  out.energy = 0.5 * (lo + hi);
  return out;
}

}  // namespace

ShootingResult shoot(const PotentialSpec& potential, double gamma, int n,
                     const ShootingConfig& cfg) {
  if (!potential.is_power_law()) {
    throw DomainError("shoot: only power-law potentials are supported");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("shoot: gamma must be finite and >= 0");
  }
  if (n < 0) throw DomainError("shoot: n must be >= 0");
  if (!(cfg.step > 0.0) || !(cfg.energy_tolerance > 0.0) || !(cfg.r_min_factor > 0.0) ||
      !(cfg.turning_multiplier >= 1.0) || !(cfg.decay_lengths > 0.0)) {
    throw DomainError("shoot: invalid configuration");
  }
  const PowerLaw& p = potential.power_law_params();
  const double length = std::pow(std::abs(p.lambda), -1.0 / (p.nu + 2.0));
  const double r_min = cfg.r_min_factor * length;
  // A box that is too small pushes confining levels up, which only enlarges
  // the next box, so confining potentials start small; attractive ones start
  // wide enough to hold a few levels.
  double r_max = (p.nu > 0.0 ? 3.0 : 20.0) * length;

  for (int attempt = 0; attempt < cfg.max_box_enlargements; ++attempt) {
    const BoxSolve box = solve_in_box(p, gamma, n, r_min, r_max, cfg);
    if (!box.bound) {
      r_max *= 2.0;
      continue;
    }
    const double r_c = std::pow(box.energy / p.lambda, 1.0 / p.nu);
    const double kappa = std::sqrt(std::abs(box.energy * (std::pow(2.0, p.nu) - 1.0)));
    const double required = cfg.turning_multiplier * r_c + cfg.decay_lengths / kappa;
    if (required <= r_max) {
      return ShootingResult{box.energy, box.nodes, r_min, r_max, box.points};
    }
    r_max = 1.25 * required;
  }
  throw ConvergenceError("shoot: integration box did not settle");
}

double shoot_eigenvalue(const PotentialSpec& potential, double gamma, int n,
                        const ShootingConfig& config) {
  return shoot(potential, gamma, n, config).energy;
}

}  // namespace abflux
