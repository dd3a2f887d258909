#include "abflux/abflux.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "action.hpp"
#include "analysis.hpp"
#include "closed_form.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "reports.hpp"
#include "serialization.hpp"
#include "special_functions.hpp"

struct ab_potential {
  abflux::PotentialSpec spec;
};

struct ab_spectrum_table {
  abflux::SpectrumTable table;
};

struct ab_well_comparison {
  abflux::WellComparison cmp;
};

struct ab_tendency_grid {
  abflux::TendencyGrid grid;
};

namespace {

thread_local std::string g_last_error;

class InvalidArgument : public std::exception {
 public:
  explicit InvalidArgument(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

 private:
  std::string msg_;
};

ab_status fail(ab_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <class F>
ab_status guard(F&& body) {
  try {
    body();
    return AB_OK;
  } catch (const InvalidArgument& e) {
    return fail(AB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const abflux::DomainError& e) {
    return fail(AB_ERR_DOMAIN, e.what());
  } catch (const abflux::ConvergenceError& e) {
    return fail(AB_ERR_CONVERGENCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AB_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
T& require(T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
  return *p;
}

template <class T>
const T& require(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
  return *p;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

abflux::UnitPreset to_preset(ab_units units) {
  switch (units) {
    case AB_UNITS_REDUCED: return abflux::UnitPreset::Reduced;
    case AB_UNITS_FIG1: return abflux::UnitPreset::Fig1;
    case AB_UNITS_FIG2A: return abflux::UnitPreset::Fig2a;
    case AB_UNITS_FIG2B: return abflux::UnitPreset::Fig2b;
    case AB_UNITS_FIG2C: return abflux::UnitPreset::Fig2c;
    case AB_UNITS_FIG2D: return abflux::UnitPreset::Fig2d;
  }
  throw InvalidArgument("unknown unit preset");
}

ab_units from_preset(abflux::UnitPreset preset) {
  switch (preset) {
    case abflux::UnitPreset::Reduced: return AB_UNITS_REDUCED;
    case abflux::UnitPreset::Fig1: return AB_UNITS_FIG1;
    case abflux::UnitPreset::Fig2a: return AB_UNITS_FIG2A;
    case abflux::UnitPreset::Fig2b: return AB_UNITS_FIG2B;
    case abflux::UnitPreset::Fig2c: return AB_UNITS_FIG2C;
    case abflux::UnitPreset::Fig2d: return AB_UNITS_FIG2D;
  }
  return AB_UNITS_REDUCED;
}

abflux::MaslovConstant to_maslov(ab_maslov m) {
  switch (m) {
    case AB_MASLOV_SMOOTH_SMOOTH: return abflux::MaslovConstant::SmoothSmooth;
    case AB_MASLOV_SMOOTH_WALL: return abflux::MaslovConstant::SmoothWall;
    case AB_MASLOV_WALL_WALL: return abflux::MaslovConstant::WallWall;
  }
  throw InvalidArgument("unknown Maslov constant");
}

abflux::Boundary to_boundary(ab_boundary b) {
  switch (b) {
    case AB_BOUNDARY_WALL: return abflux::Boundary::Wall;
    case AB_BOUNDARY_SMOOTH: return abflux::Boundary::Smooth;
  }
  throw InvalidArgument("unknown boundary kind");
}

abflux::Variable to_variable(ab_variable v) {
  switch (v) {
    case AB_VAR_N: return abflux::Variable::N;
    case AB_VAR_Q: return abflux::Variable::Q;
    case AB_VAR_KMU: return abflux::Variable::Kmu;
  }
  throw InvalidArgument("unknown variable");
}

ab_curvature from_curvature(abflux::Curvature c) {
  switch (c) {
    case abflux::Curvature::BendsDown: return AB_CURVATURE_BENDS_DOWN;
    case abflux::Curvature::Linear: return AB_CURVATURE_LINEAR;
    case abflux::Curvature::BendsUp: return AB_CURVATURE_BENDS_UP;
  }
  return AB_CURVATURE_LINEAR;
}

void check_format(ab_format format) {
  if (format != AB_FORMAT_CSV && format != AB_FORMAT_JSON) throw InvalidArgument("unknown format");
}

abflux::QuantizationSetup make_setup(const ab_potential* p, double gamma,
                                     const ab_quantize_options* opts) {
  abflux::QuantizationSetup setup{require(p, "potential").spec, gamma};
  if (opts != nullptr) {
    if (opts->use_maslov) setup.constant = abflux::MaslovOverride{to_maslov(opts->maslov)};
    setup.quadrature_tolerance = opts->quadrature_tolerance;
    setup.root_tolerance = opts->root_tolerance;
  }
  return setup;
}

void fill_report(const abflux::TendencyReport& r, ab_tendency_report& out) {
  out.nu = r.nu;
  out.curvature = from_curvature(r.curvature);
  for (int i = 0; i < 3; ++i) {
    out.first_derivative_signs[i] = r.first_derivative_signs[i];
    out.ratios[i] = r.ratios[i];
  }
  out.flux_slope_sign = r.flux_slope_sign;
  out.curvature_consistent = r.curvature_consistent ? 1 : 0;
}

template <class F>
ab_status scalar(double* out, F&& f) {
  return guard([&] { require(out, "out") = f(); });
}

}  // namespace

extern "C" {

const char* ab_version(void) { return "1.0.0"; }

const char* ab_last_error(void) { return g_last_error.c_str(); }

void ab_string_free(char* s) { std::free(s); }

const char* ab_status_name(ab_status status) {
  switch (status) {
    case AB_OK: return "ok";
    case AB_ERR_DOMAIN: return "domain error";
    case AB_ERR_CONVERGENCE: return "convergence failure";
    case AB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AB_ERR_IO: return "i/o error";
    case AB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

// ---- special functions

ab_status ab_gamma(double x, double* out) {
  return scalar(out, [&] { return abflux::gamma(x); });
}

ab_status ab_log_gamma(double x, double* out) {
  return scalar(out, [&] { return abflux::log_gamma(x); });
}

ab_status ab_gamma_ratio(double a, double b, double* out) {
  return scalar(out, [&] { return abflux::gamma_ratio(a, b); });
}

ab_status ab_bessel_j(double order, double x, double* out) {
  return scalar(out, [&] { return abflux::bessel_j(order, x); });
}

ab_status ab_bessel_j_zero(double order, int m, double* out) {
  return scalar(out, [&] { return abflux::bessel_j_zero(order, m); });
}

// ---- model

ab_status ab_potential_power_law(double lambda, double nu, ab_potential** out) {
  return guard([&] {
    require(out, "out") = new ab_potential{abflux::PotentialSpec::power_law(lambda, nu)};
  });
}

ab_status ab_potential_infinite_well(double radius, ab_potential** out) {
  return guard([&] {
    require(out, "out") = new ab_potential{abflux::PotentialSpec::infinite_well(radius)};
  });
}

void ab_potential_free(ab_potential* p) { delete p; }

ab_status ab_potential_exponent(const ab_potential* p, double* out) {
  return scalar(out, [&] { return require(p, "potential").spec.exponent(); });
}

ab_status ab_potential_value_at(const ab_potential* p, double r, double* out) {
  return scalar(out, [&] { return require(p, "potential").spec.value_at(r); });
}

ab_status ab_potential_describe(const ab_potential* p, char** out) {
  return guard([&] {
    require(out, "out") = copy_string(require(p, "potential").spec.describe());
  });
}

ab_status ab_effective_gamma(int q, int k, double mu0, double* out) {
  return scalar(out, [&] { return abflux::effective_gamma(q, k, mu0); });
}

ab_status ab_duality_map(double nu, double energy, double lambda, double gamma,
                         ab_dual_parameters* out) {
  return guard([&] {
    const auto d = abflux::duality_map(nu, energy, lambda, gamma);
    require(out, "out") = ab_dual_parameters{d.nu, d.energy, d.lambda, d.gamma};
  });
}

ab_status ab_dual_exponent(double nu, double* out) {
  return scalar(out, [&] { return abflux::dual_exponent(nu); });
}

ab_status ab_maslov_constant(ab_boundary left, ab_boundary right, ab_maslov* out) {
  return guard([&] {
    switch (abflux::maslov_constant(to_boundary(left), to_boundary(right))) {
      case abflux::MaslovConstant::SmoothSmooth: require(out, "out") = AB_MASLOV_SMOOTH_SMOOTH; break;
      case abflux::MaslovConstant::SmoothWall: require(out, "out") = AB_MASLOV_SMOOTH_WALL; break;
      case abflux::MaslovConstant::WallWall: require(out, "out") = AB_MASLOV_WALL_WALL; break;
    }
  });
}

ab_status ab_maslov_value(ab_maslov m, double* out) {
  return scalar(out, [&] { return abflux::maslov_value(to_maslov(m)); });
}

ab_status ab_unit_scale(ab_units units, const ab_potential* p, double* factor, char** label) {
  return guard([&] {
    const auto scale = abflux::unit_scale(to_preset(units), require(p, "potential").spec);
    require(factor, "factor") = scale.factor;
    if (label != nullptr) *label = copy_string(scale.label);
  });
}

ab_status ab_parse_units(const char* name, ab_units* out) {
  return guard([&] {
    require(out, "out") = from_preset(abflux::parse_unit_preset(&require(name, "name")));
  });
}

ab_status ab_default_units(const ab_potential* p, ab_units* out) {
  return guard([&] {
    require(out, "out") =
        from_preset(abflux::default_figure_preset(require(p, "potential").spec));
  });
}

// ---- closed forms

ab_status ab_energy_negative_power(int n, double gamma, double lambda, double nu, double* out) {
  return scalar(out, [&] { return abflux::energy_negative_power(n, gamma, lambda, nu); });
}

ab_status ab_energy_positive_power(int n, double gamma, double lambda, double nu, double* out) {
  return scalar(out, [&] { return abflux::energy_positive_power(n, gamma, lambda, nu); });
}

ab_status ab_energy_positive_power_via_duality(int n, double gamma, double lambda, double nu,
                                               double* out) {
  return scalar(out,
                [&] { return abflux::energy_positive_power_via_duality(n, gamma, lambda, nu); });
}

ab_status ab_energy_coulomb(int n, int q, int k, double mu0, double* out) {
  return scalar(out, [&] { return abflux::energy_coulomb(n, q, k, mu0); });
}

ab_status ab_energy_oscillator(int n, double gamma, double* out) {
  return scalar(out, [&] { return abflux::energy_oscillator(n, gamma); });
}

ab_status ab_energy_well_semiclassical(int n, double gamma, double radius, double* out) {
  return scalar(out, [&] { return abflux::energy_well_semiclassical(n, gamma, radius); });
}

ab_status ab_closed_form_energy(const ab_potential* p, int n, double gamma, double* out) {
  return scalar(out,
                [&] { return abflux::closed_form_energy(require(p, "potential").spec, n, gamma); });
}

// ---- spectrum tables

ab_status ab_spectrum_table_create(const ab_potential* p, double mu0, int n_max, int q_max,
                                   int k_lo, int k_hi, ab_units units, unsigned workers,
                                   ab_spectrum_table** out) {
  return guard([&] {
    const auto& spec = require(p, "potential").spec;
    require(out, "out");
    const auto scale = abflux::unit_scale(to_preset(units), spec);
    auto table = abflux::spectrum_table(spec, mu0, abflux::GridRange{n_max, q_max, k_lo, k_hi},
                                        scale, workers == 0 ? 1 : workers);
    *out = new ab_spectrum_table{std::move(table)};
  });
}

ab_status ab_spectrum_table_from_json(const char* json, ab_spectrum_table** out) {
  return guard([&] {
    require(out, "out");
    *out = new ab_spectrum_table{abflux::spectrum_from_json(&require(json, "json"))};
  });
}

void ab_spectrum_table_free(ab_spectrum_table* t) { delete t; }

ab_status ab_spectrum_table_row_count(const ab_spectrum_table* t, size_t* out) {
  return guard([&] { require(out, "out") = require(t, "table").table.rows.size(); });
}

ab_status ab_spectrum_table_get_row(const ab_spectrum_table* t, size_t index, ab_spectrum_row* out) {
  return guard([&] {
    const auto& rows = require(t, "table").table.rows;
    if (index >= rows.size()) throw InvalidArgument("row index out of range");
    const auto& r = rows[index];
    require(out, "out") = ab_spectrum_row{r.n, r.q, r.k, r.gamma, r.energy};
  });
}

ab_status ab_spectrum_table_mu0(const ab_spectrum_table* t, double* out) {
  return scalar(out, [&] { return require(t, "table").table.mu0; });
}

ab_status ab_spectrum_table_unit(const ab_spectrum_table* t, double* factor, char** label) {
  return guard([&] {
    const auto& unit = require(t, "table").table.unit;
    require(factor, "factor") = unit.factor;
    if (label != nullptr) *label = copy_string(unit.label);
  });
}

ab_status ab_spectrum_table_render(const ab_spectrum_table* t, ab_format format, char** out) {
  return guard([&] {
    check_format(format);
    const auto& table = require(t, "table").table;
    require(out, "out") = copy_string(format == AB_FORMAT_CSV ? abflux::spectrum_to_csv(table)
                                                              : abflux::spectrum_to_json(table));
  });
}

ab_status ab_spectrum_table_svg(const ab_spectrum_table* t, char** out) {
  return guard([&] {
    const auto& table = require(t, "table").table;
    require(out, "out") = copy_string(abflux::spectrum_svg(table, "energy levels"));
  });
}

ab_status ab_spectrum_table_equal(const ab_spectrum_table* a, const ab_spectrum_table* b,
                                  int* out) {
  return guard([&] {
    const auto& x = require(a, "table a").table;
    const auto& y = require(b, "table b").table;
    bool same = x.potential == y.potential && x.mu0 == y.mu0 && x.unit.label == y.unit.label &&
                x.unit.factor == y.unit.factor && x.method == y.method &&
                x.rows.size() == y.rows.size();
    for (std::size_t i = 0; same && i < x.rows.size(); ++i) {
      const auto& r = x.rows[i];
      const auto& s = y.rows[i];
      same = r.n == s.n && r.q == s.q && r.k == s.k && r.gamma == s.gamma && r.energy == s.energy;
    }
    require(out, "out") = same ? 1 : 0;
  });
}

// ---- well comparison

ab_status ab_well_comparison_create(double gamma, int n_max, ab_well_comparison** out) {
  return guard([&] {
    require(out, "out");
    *out = new ab_well_comparison{abflux::compare_well(gamma, n_max)};
  });
}

void ab_well_comparison_free(ab_well_comparison* c) { delete c; }

ab_status ab_well_comparison_row_count(const ab_well_comparison* c, size_t* out) {
  return guard([&] { require(out, "out") = require(c, "comparison").cmp.rows.size(); });
}

ab_status ab_well_comparison_get_row(const ab_well_comparison* c, size_t index,
                                 ab_well_comparison_row* out) {
  return guard([&] {
    const auto& rows = require(c, "comparison").cmp.rows;
    if (index >= rows.size()) throw InvalidArgument("row index out of range");
    const auto& r = rows[index];
    require(out, "out") = ab_well_comparison_row{r.n, r.exact, r.semiclassical, r.diff};
  });
}

ab_status ab_well_comparison_render(const ab_well_comparison* c, ab_format format, char** out) {
  return guard([&] {
    check_format(format);
    const auto& cmp = require(c, "comparison").cmp;
    require(out, "out") = copy_string(format == AB_FORMAT_CSV ? abflux::well_comparison_csv(cmp)
                                                              : abflux::well_comparison_json(cmp));
  });
}

ab_status ab_well_comparison_svg(const ab_well_comparison* c, char** out) {
  return guard([&] {
    require(out, "out") = copy_string(abflux::well_comparison_svg(require(c, "comparison").cmp));
  });
}

// ---- action

void ab_quantize_options_default(ab_quantize_options* opts) {
  if (opts == nullptr) return;
  const abflux::QuantizationSetup defaults{abflux::PotentialSpec::infinite_well(1.0)};
  opts->use_maslov = 0;
  opts->maslov = AB_MASLOV_WALL_WALL;
  opts->quadrature_tolerance = defaults.quadrature_tolerance;
  opts->root_tolerance = defaults.root_tolerance;
}

ab_status ab_quantization_constant(const ab_potential* p, double gamma,
                                   const ab_quantize_options* opts, double* out) {
  return scalar(out, [&] { return abflux::quantization_constant(make_setup(p, gamma, opts)); });
}

ab_status ab_turning_point(double energy, const ab_potential* p, double* out) {
  return scalar(out, [&] { return abflux::turning_point(energy, require(p, "potential").spec); });
}

ab_status ab_action_integral_numeric(double energy, const ab_potential* p, double rel_tol,
                                     double* out) {
  return scalar(out, [&] {
    return abflux::action_integral_numeric(energy, require(p, "potential").spec, rel_tol);
  });
}

ab_status ab_action_integral_closed(double energy, double lambda, double nu, double* out) {
  return scalar(out, [&] { return abflux::action_integral_closed(energy, lambda, nu); });
}

ab_status ab_quantize_energy(const ab_potential* p, double gamma, int n,
                             const ab_quantize_options* opts, double* out) {
  return scalar(out, [&] { return abflux::quantize_energy(make_setup(p, gamma, opts), n); });
}

// ---- oracles

void ab_shooting_config_default(ab_shooting_config* cfg) {
  if (cfg == nullptr) return;
  const abflux::ShootingConfig d;
  *cfg = ab_shooting_config{d.step,           d.min_points,       d.r_min_factor,
                            d.turning_multiplier, d.decay_lengths, d.energy_tolerance,
                            d.max_bisections, d.max_box_enlargements};
}

ab_status ab_shoot(const ab_potential* p, double gamma, int n, const ab_shooting_config* cfg,
                   ab_shooting_result* out) {
  return guard([&] {
    abflux::ShootingConfig config;
    if (cfg != nullptr) {
      config = abflux::ShootingConfig{cfg->step,           cfg->min_points,
                                      cfg->r_min_factor,   cfg->turning_multiplier,
                                      cfg->decay_lengths,  cfg->energy_tolerance,
                                      cfg->max_bisections, cfg->max_box_enlargements};
    }
    const auto r = abflux::shoot(require(p, "potential").spec, gamma, n, config);
    require(out, "out") = ab_shooting_result{r.energy, r.nodes, r.r_min, r.r_max, r.grid_points};
  });
}

ab_status ab_well_exact_spectrum(double gamma, double radius, int count, double* out) {
  return guard([&] {
    require(out, "out");
    const auto levels = abflux::well_exact_spectrum(gamma, radius, count);
    for (std::size_t i = 0; i < levels.size(); ++i) out[i] = levels[i];
  });
}

// ---- analysis

ab_status ab_spectral_derivative(const ab_potential* p, double mu0, double n, double q, double k,
                                 ab_variable which, int order, double* out) {
  return scalar(out, [&] {
    return abflux::spectral_derivative(require(p, "potential").spec, mu0, {n, q, k},
                                       to_variable(which), order);
  });
}

ab_status ab_spectral_mixed_derivative(const ab_potential* p, double mu0, double n, double q,
                                       double k, double* out) {
  return scalar(out, [&] {
    return abflux::spectral_mixed_derivative(require(p, "potential").spec, mu0, {n, q, k});
  });
}

ab_status ab_tendency_classify(double nu, ab_curvature* out) {
  return guard([&] { require(out, "out") = from_curvature(abflux::tendency_classify(nu)); });
}

ab_status ab_derivative_ratios(double nu, double out[3]) {
  return guard([&] {
    require(out, "out");
    const auto r = abflux::derivative_ratios(nu);
    for (int i = 0; i < 3; ++i) out[i] = r[i];
  });
}

ab_status ab_flux_slope_effect(double nu, int* out) {
  return guard([&] { require(out, "out") = abflux::flux_slope_effect(nu); });
}

ab_status ab_tendency_report_compute(const ab_potential* p, double mu0, int k, int n_max,
                                     int q_max, ab_tendency_report* out) {
  return guard([&] {
    const auto r = abflux::tendency_report(require(p, "potential").spec, mu0, k, n_max, q_max);
    fill_report(r, require(out, "out"));
  });
}

const char* ab_curvature_name(ab_curvature c) {
  switch (c) {
    case AB_CURVATURE_BENDS_DOWN: return "bends_down";
    case AB_CURVATURE_LINEAR: return "linear";
    case AB_CURVATURE_BENDS_UP: return "bends_up";
  }
  return "unknown";
}

ab_status ab_tendency_grid_create(const ab_potential* p, double mu0, int k, int n_max, int q_max,
                                  ab_units units, unsigned workers, ab_tendency_grid** out) {
  return guard([&] {
    const auto& spec = require(p, "potential").spec;
    require(out, "out");
    const auto scale = abflux::unit_scale(to_preset(units), spec);
    *out = new ab_tendency_grid{
        abflux::tendency_grid(spec, mu0, k, n_max, q_max, scale, workers == 0 ? 1 : workers)};
  });
}

void ab_tendency_grid_free(ab_tendency_grid* g) { delete g; }

ab_status ab_tendency_grid_report(const ab_tendency_grid* g, ab_tendency_report* out) {
  return guard([&] { fill_report(require(g, "grid").grid.report, require(out, "out")); });
}

ab_status ab_tendency_grid_render(const ab_tendency_grid* g, ab_format format, char** out) {
  return guard([&] {
    check_format(format);
    const auto& grid = require(g, "grid").grid;
    require(out, "out") = copy_string(format == AB_FORMAT_CSV ? abflux::spectrum_to_csv(grid.table)
                                                              : abflux::tendency_grid_json(grid));
  });
}

ab_status ab_tendency_grid_svg(const ab_tendency_grid* g, char** out) {
  return guard([&] {
    const auto& grid = require(g, "grid").grid;
    const std::string title = std::string("E(n) per q, curvature ") +
                              std::string(abflux::curvature_name(grid.report.curvature));
    require(out, "out") = copy_string(abflux::spectrum_svg(grid.table, title));
  });
}

}  // extern "C"
