#pragma once

#include <vector>

#include "model.hpp"

namespace abflux {

/// Exact infinite-well levels E_n = (j_{gamma+1/2, n+1} / pi)^2 for
/// n = 0..count-1, in units of hbar^2 pi^2 / (2 m a^2).
std::vector<double> well_exact_spectrum(double gamma, double radius, int count);

/// Numerov shooting configuration. The radial equation is integrated on a
/// uniform grid in x = ln r with u = sqrt(r) w, which turns it into
///   w'' = [r^2 (V - E) + (gamma + 1/2)^2] w
/// and removes the centrifugal singularity.
struct ShootingConfig {
  double step = 2e-3;               // grid step in ln r
  int min_points = 2000;            // step is reduced if the grid would be coarser
  double r_min_factor = 1e-6;       // r_min = factor * |lambda|^{-1/(nu+2)}
  double turning_multiplier = 2.0;  // r_max = mult * r_c + decay_lengths / kappa
  double decay_lengths = 10.0;
  double energy_tolerance = 1e-10;  // absolute, reduced units
  int max_bisections = 200;
  int max_box_enlargements = 40;
};

struct ShootingResult {
  double energy = 0.0;
  int nodes = 0;       // sign changes of u on (r_min, r_max) just below the level
  double r_min = 0.0;
  double r_max = 0.0;
  int grid_points = 0;
};

/// n-th bound level (n interior nodes) of
///   u'' + (E - lambda r^nu - gamma (gamma+1) / r^2) u = 0,  u(0) = u(inf) = 0.
/// Only power-law potentials are accepted.
ShootingResult shoot(const PotentialSpec& potential, double gamma, int n,
                     const ShootingConfig& config = {});

double shoot_eigenvalue(const PotentialSpec& potential, double gamma, int n,
                        const ShootingConfig& config = {});

}  // namespace abflux
