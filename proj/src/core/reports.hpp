#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"
#include "closed_form.hpp"

namespace abflux {

struct WellComparisonRow {
  int n = 0;
  double exact = 0.0;
  double semiclassical = 0.0;
  double diff = 0.0;  // semiclassical - exact
};

/// Exact against semiclassical infinite-well levels, in units of
/// hbar^2 pi^2 / (2 m a^2).
struct WellComparison {
  double gamma = 0.0;
  std::vector<WellComparisonRow> rows;
};

WellComparison compare_well(double gamma, int n_max);

/// Header: gamma,n,E_exact,E_semiclassical,diff
std::string well_comparison_csv(const WellComparison& cmp);
std::string well_comparison_json(const WellComparison& cmp);
/// Two panels: both spectra against n, and their difference.
std::string well_comparison_svg(const WellComparison& cmp);

struct TendencyGrid {
  SpectrumTable table;
  TendencyReport report;
};

/// E(n, q) at fixed k in the given unit, with the shape report for it.
TendencyGrid tendency_grid(const PotentialSpec& potential, double mu0, int k, int n_max, int q_max,
                           const UnitScale& unit, unsigned workers = 1);

std::string tendency_grid_json(const TendencyGrid& grid);

/// E against n, one line per (q, k).
std::string spectrum_svg(const SpectrumTable& table, const std::string& title);

}  // namespace abflux
