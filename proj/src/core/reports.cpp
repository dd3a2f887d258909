#include "reports.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "errors.hpp"
#include "json_support.hpp"
#include "oracles.hpp"
#include "serialization.hpp"
#include "svg_plot.hpp"

namespace abflux {

WellComparison compare_well(double gamma, int n_max) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("compare-well: gamma must be >= 0");
  if (n_max < 0) throw DomainError("compare-well: n_max must be >= 0");
  WellComparison cmp;
  cmp.gamma = gamma;
  const auto exact = well_exact_spectrum(gamma, 1.0, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double semi = energy_well_semiclassical(n, gamma, 1.0);
    cmp.rows.push_back({n, exact[n], semi, semi - exact[n]});
  }
  return cmp;
}

namespace {

// Difference of the two columns as printed, so the three numbers agree.
double printed_diff(const WellComparisonRow& r) {
  return round_to_output(r.semiclassical) - round_to_output(r.exact);
}

}  // namespace

std::string well_comparison_csv(const WellComparison& cmp) {
  std::ostringstream out;
  out << "gamma,n,E_exact,E_semiclassical,diff\n";
  const std::string g = format_number(cmp.gamma);
  for (const auto& r : cmp.rows) {
    out << g << ',' << r.n << ',' << format_number(r.exact) << ','
        << format_number(r.semiclassical) << ',' << format_number(printed_diff(r)) << '\n';
  }
  return out.str();
}

std::string well_comparison_json(const WellComparison& cmp) {
  nlohmann::ordered_json out;
  out["gamma"] = detail::number(cmp.gamma);
  out["unit"] = "hbar^2*pi^2/(2*m*a^2)";
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : cmp.rows) {
    rows.push_back({{"n", r.n},
                    {"E_exact", detail::number(r.exact)},
                    {"E_semiclassical", detail::number(r.semiclassical)},
                    {"diff", detail::number(printed_diff(r))}});
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string well_comparison_svg(const WellComparison& cmp) {
  PlotSeries exact{"exact", {}, {}};
  PlotSeries semi{"semiclassical", {}, {}};
  PlotSeries diff{"difference", {}, {}};
  for (const auto& r : cmp.rows) {
    exact.x.push_back(r.n);
    exact.y.push_back(r.exact);
    semi.x.push_back(r.n);
    semi.y.push_back(r.semiclassical);
    diff.x.push_back(r.n);
    diff.y.push_back(r.diff);
  }
  const std::string unit = "E [hbar^2 pi^2 / 2ma^2]";
  const std::vector<PlotPanel> panels = {
      {"(a) energy levels", "n", unit, {exact, semi}},
      {"(b) semiclassical - exact", "n", "difference", {diff}},
  };
  return render_svg(panels, "infinite well, gamma = " + format_number(cmp.gamma));
}

TendencyGrid tendency_grid(const PotentialSpec& potential, double mu0, int k, int n_max, int q_max,
                           const UnitScale& unit, unsigned workers) {
  TendencyGrid grid;
  grid.report = tendency_report(potential, mu0, k, n_max, q_max);
  grid.table = spectrum_table(potential, mu0, GridRange{n_max, q_max, k, k}, unit, workers);
  return grid;
}

std::string tendency_grid_json(const TendencyGrid& grid) {
  const auto& r = grid.report;
  nlohmann::ordered_json report;
  report["nu"] = std::isinf(r.nu) ? nlohmann::ordered_json("inf") : detail::number(r.nu);
  report["curvature"] = std::string(curvature_name(r.curvature));
  report["first_derivative_signs"] = {{"n", r.first_derivative_signs[0]},
                                      {"q", r.first_derivative_signs[1]},
                                      {"kmu", r.first_derivative_signs[2]}};
  report["ratios"] = {{"n_q", detail::number(r.ratios[0])},
                      {"n_kmu", detail::number(r.ratios[1])},
                      {"q_kmu", detail::number(r.ratios[2])}};
  report["flux_slope_sign"] = r.flux_slope_sign;
  report["curvature_consistent"] = r.curvature_consistent;
  nlohmann::ordered_json out;
  out["report"] = std::move(report);
  out["table"] = detail::table_json(grid.table);
  return out.dump(2) + "\n";
}

std::string spectrum_svg(const SpectrumTable& table, const std::string& title) {
  validate_table(table);
  std::map<std::pair<int, int>, PlotSeries> by_qk;
  for (const auto& row : table.rows) {
    auto& s = by_qk[{row.q, row.k}];
    if (s.label.empty()) s.label = "q=" + std::to_string(row.q) + ", k=" + std::to_string(row.k);
    s.x.push_back(row.n);
    s.y.push_back(row.energy);
  }
  PlotPanel panel{title, "n", "E [" + table.unit.label + "]", {}};
  for (auto& [key, s] : by_qk) panel.series.push_back(std::move(s));
  const std::vector<PlotPanel> panels = {std::move(panel)};
  return render_svg(panels, table.potential.describe() + ", mu0 = " + format_number(table.mu0));
}

}  // namespace abflux
