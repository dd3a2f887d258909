/*
 * abflux: semiclassical bound states of V(r) = lambda r^nu in an
 * Aharonov-Bohm flux background.
 *
 * Plain C interface. Every function returns an ab_status; on failure a
 * one-line description is available from ab_last_error() on the calling
 * thread until the next failing call. Energies are in reduced units
 * (hbar = 1, 2m = 1) unless a unit preset says otherwise.
 *
 * Strings returned through char** are heap-allocated and must be released
 * with ab_string_free. Handles are released with their *_free function;
 * passing NULL to any *_free function is a no-op.
 */
#ifndef ABFLUX_ABFLUX_H
#define ABFLUX_ABFLUX_H

#include <stddef.h>

#if defined(ABFLUX_BUILDING)
#define ABFLUX_API __attribute__((visibility("default")))
#else
#define ABFLUX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ab_status {
  AB_OK = 0,
  AB_ERR_DOMAIN = 1,           /* parameter outside the model's validity range */
  AB_ERR_CONVERGENCE = 2,      /* numeric method did not converge */
  AB_ERR_INVALID_ARGUMENT = 3, /* NULL pointer, bad enum, index out of range */
  AB_ERR_IO = 4,
  AB_ERR_INTERNAL = 5
} ab_status;

typedef enum ab_units {
  AB_UNITS_REDUCED = 0,
  AB_UNITS_FIG1 = 1,  /* well: hbar^2 pi^2 / (2 m a^2) */
  AB_UNITS_FIG2A = 2, /* Coulomb nu = -1: m c^2 alpha^2 / 2 */
  AB_UNITS_FIG2B = 3, /* linear nu = 1: (9 pi^2 lambda^2 hbar^2 / (8 m))^(1/3) */
  AB_UNITS_FIG2C = 4, /* oscillator nu = 2: hbar omega */
  AB_UNITS_FIG2D = 5  /* well: hbar^2 pi^2 / (2 m a^2) */
} ab_units;

typedef enum ab_format { AB_FORMAT_CSV = 0, AB_FORMAT_JSON = 1 } ab_format;

typedef enum ab_variable { AB_VAR_N = 0, AB_VAR_Q = 1, AB_VAR_KMU = 2 } ab_variable;

typedef enum ab_boundary { AB_BOUNDARY_WALL = 0, AB_BOUNDARY_SMOOTH = 1 } ab_boundary;

typedef enum ab_maslov {
  AB_MASLOV_SMOOTH_SMOOTH = 0, /* 1/2 */
  AB_MASLOV_SMOOTH_WALL = 1,   /* 3/4 */
  AB_MASLOV_WALL_WALL = 2      /* 1 */
} ab_maslov;

typedef enum ab_curvature {
  AB_CURVATURE_BENDS_DOWN = 0,
  AB_CURVATURE_LINEAR = 1,
  AB_CURVATURE_BENDS_UP = 2
} ab_curvature;

typedef struct ab_potential ab_potential;
typedef struct ab_spectrum_table ab_spectrum_table;
typedef struct ab_well_comparison ab_well_comparison;
typedef struct ab_tendency_grid ab_tendency_grid;

typedef struct ab_spectrum_row {
  int n;
  int q;
  int k;
  double gamma;
  double energy; /* in the table's display unit */
} ab_spectrum_row;

typedef struct ab_well_comparison_row {
  int n;
  double exact;
  double semiclassical;
  double diff;
} ab_well_comparison_row;

typedef struct ab_dual_parameters {
  double nu;
  double energy;
  double lambda;
  double gamma;
} ab_dual_parameters;

typedef struct ab_quantize_options {
  int use_maslov;   /* 0: built-in constant; 1: gamma part + maslov value */
  ab_maslov maslov;
  double quadrature_tolerance;
  double root_tolerance;
} ab_quantize_options;

typedef struct ab_shooting_config {
  double step;
  int min_points;
  double r_min_factor;
  double turning_multiplier;
  double decay_lengths;
  double energy_tolerance;
  int max_bisections;
  int max_box_enlargements;
} ab_shooting_config;

typedef struct ab_shooting_result {
  double energy;
  int nodes;
  double r_min;
  double r_max;
  int grid_points;
} ab_shooting_result;

typedef struct ab_tendency_report {
  double nu; /* +inf for the well */
  ab_curvature curvature;
  int first_derivative_signs[3]; /* n, q, |k+mu0| */
  double ratios[3];              /* n:q, n:|k+mu0|, q:|k+mu0| */
  int flux_slope_sign;
  int curvature_consistent;
} ab_tendency_report;

/* ---- library ---------------------------------------------------------- */

ABFLUX_API const char* ab_version(void);
ABFLUX_API const char* ab_last_error(void);
ABFLUX_API void ab_string_free(char* s);
ABFLUX_API const char* ab_status_name(ab_status status);

/* ---- special functions ------------------------------------------------ */

ABFLUX_API ab_status ab_gamma(double x, double* out);
ABFLUX_API ab_status ab_log_gamma(double x, double* out);
ABFLUX_API ab_status ab_gamma_ratio(double a, double b, double* out);
ABFLUX_API ab_status ab_bessel_j(double order, double x, double* out);
ABFLUX_API ab_status ab_bessel_j_zero(double order, int m, double* out);

/* ---- model ------------------------------------------------------------ */

ABFLUX_API ab_status ab_potential_power_law(double lambda, double nu, ab_potential** out);
ABFLUX_API ab_status ab_potential_infinite_well(double radius, ab_potential** out);
ABFLUX_API void ab_potential_free(ab_potential* p);
ABFLUX_API ab_status ab_potential_exponent(const ab_potential* p, double* out);
ABFLUX_API ab_status ab_potential_value_at(const ab_potential* p, double r, double* out);
ABFLUX_API ab_status ab_potential_describe(const ab_potential* p, char** out);

ABFLUX_API ab_status ab_effective_gamma(int q, int k, double mu0, double* out);
ABFLUX_API ab_status ab_duality_map(double nu, double energy, double lambda, double gamma,
                                    ab_dual_parameters* out);
ABFLUX_API ab_status ab_dual_exponent(double nu, double* out);
ABFLUX_API ab_status ab_maslov_constant(ab_boundary left, ab_boundary right, ab_maslov* out);
ABFLUX_API ab_status ab_maslov_value(ab_maslov m, double* out);

/* Resolves a unit preset for a potential. label may be NULL. */
ABFLUX_API ab_status ab_unit_scale(ab_units units, const ab_potential* p, double* factor,
                                   char** label);
ABFLUX_API ab_status ab_parse_units(const char* name, ab_units* out);
ABFLUX_API ab_status ab_default_units(const ab_potential* p, ab_units* out);

/* ---- closed forms (reduced units unless noted) ------------------------ */

ABFLUX_API ab_status ab_energy_negative_power(int n, double gamma, double lambda, double nu,
                                              double* out);
ABFLUX_API ab_status ab_energy_positive_power(int n, double gamma, double lambda, double nu,
                                              double* out);
ABFLUX_API ab_status ab_energy_positive_power_via_duality(int n, double gamma, double lambda,
                                                          double nu, double* out);
ABFLUX_API ab_status ab_energy_coulomb(int n, int q, int k, double mu0, double* out);
/* units of hbar omega */
ABFLUX_API ab_status ab_energy_oscillator(int n, double gamma, double* out);
/* units of hbar^2 pi^2 / (2 m a^2) */
ABFLUX_API ab_status ab_energy_well_semiclassical(int n, double gamma, double radius,
                                                  double* out);
ABFLUX_API ab_status ab_closed_form_energy(const ab_potential* p, int n, double gamma,
                                           double* out);

/* ---- spectrum tables -------------------------------------------------- */

/* workers == 0 picks one worker. */
ABFLUX_API ab_status ab_spectrum_table_create(const ab_potential* p, double mu0, int n_max,
                                              int q_max, int k_lo, int k_hi, ab_units units,
                                              unsigned workers, ab_spectrum_table** out);
ABFLUX_API ab_status ab_spectrum_table_from_json(const char* json, ab_spectrum_table** out);
ABFLUX_API void ab_spectrum_table_free(ab_spectrum_table* t);
ABFLUX_API ab_status ab_spectrum_table_row_count(const ab_spectrum_table* t, size_t* out);
ABFLUX_API ab_status ab_spectrum_table_get_row(const ab_spectrum_table* t, size_t index,
                                           ab_spectrum_row* out);
ABFLUX_API ab_status ab_spectrum_table_mu0(const ab_spectrum_table* t, double* out);
ABFLUX_API ab_status ab_spectrum_table_unit(const ab_spectrum_table* t, double* factor,
                                            char** label);
ABFLUX_API ab_status ab_spectrum_table_render(const ab_spectrum_table* t, ab_format format,
                                              char** out);
ABFLUX_API ab_status ab_spectrum_table_svg(const ab_spectrum_table* t, char** out);
/* *out = 1 when every header field and row compares equal. */
ABFLUX_API ab_status ab_spectrum_table_equal(const ab_spectrum_table* a,
                                             const ab_spectrum_table* b, int* out);

/* ---- infinite-well comparison ---------------------------------------- */

ABFLUX_API ab_status ab_well_comparison_create(double gamma, int n_max, ab_well_comparison** out);
ABFLUX_API void ab_well_comparison_free(ab_well_comparison* c);
ABFLUX_API ab_status ab_well_comparison_row_count(const ab_well_comparison* c, size_t* out);
ABFLUX_API ab_status ab_well_comparison_get_row(const ab_well_comparison* c, size_t index,
                                            ab_well_comparison_row* out);
ABFLUX_API ab_status ab_well_comparison_render(const ab_well_comparison* c, ab_format format,
                                               char** out);
ABFLUX_API ab_status ab_well_comparison_svg(const ab_well_comparison* c, char** out);

/* ---- action and quantization ----------------------------------------- */

ABFLUX_API void ab_quantize_options_default(ab_quantize_options* opts);
/* opts may be NULL for the defaults. */
ABFLUX_API ab_status ab_quantization_constant(const ab_potential* p, double gamma,
                                              const ab_quantize_options* opts, double* out);
ABFLUX_API ab_status ab_turning_point(double energy, const ab_potential* p, double* out);
ABFLUX_API ab_status ab_action_integral_numeric(double energy, const ab_potential* p,
                                                double rel_tol, double* out);
ABFLUX_API ab_status ab_action_integral_closed(double energy, double lambda, double nu,
                                               double* out);
ABFLUX_API ab_status ab_quantize_energy(const ab_potential* p, double gamma, int n,
                                        const ab_quantize_options* opts, double* out);

/* ---- oracles ---------------------------------------------------------- */

ABFLUX_API void ab_shooting_config_default(ab_shooting_config* cfg);
/* cfg may be NULL for the defaults. */
ABFLUX_API ab_status ab_shoot(const ab_potential* p, double gamma, int n,
                              const ab_shooting_config* cfg, ab_shooting_result* out);
/* Writes count levels (units hbar^2 pi^2 / (2 m a^2)) into out. */
ABFLUX_API ab_status ab_well_exact_spectrum(double gamma, double radius, int count, double* out);

/* ---- analysis --------------------------------------------------------- */

ABFLUX_API ab_status ab_spectral_derivative(const ab_potential* p, double mu0, double n, double q,
                                            double k, ab_variable which, int order, double* out);
ABFLUX_API ab_status ab_spectral_mixed_derivative(const ab_potential* p, double mu0, double n,
                                                  double q, double k, double* out);
ABFLUX_API ab_status ab_tendency_classify(double nu, ab_curvature* out);
ABFLUX_API ab_status ab_derivative_ratios(double nu, double out[3]);
ABFLUX_API ab_status ab_flux_slope_effect(double nu, int* out);
ABFLUX_API ab_status ab_tendency_report_compute(const ab_potential* p, double mu0, int k,
                                                int n_max, int q_max, ab_tendency_report* out);
ABFLUX_API const char* ab_curvature_name(ab_curvature c);

ABFLUX_API ab_status ab_tendency_grid_create(const ab_potential* p, double mu0, int k, int n_max,
                                             int q_max, ab_units units, unsigned workers,
                                             ab_tendency_grid** out);
ABFLUX_API void ab_tendency_grid_free(ab_tendency_grid* g);
ABFLUX_API ab_status ab_tendency_grid_report(const ab_tendency_grid* g, ab_tendency_report* out);
/* CSV renders the table only; JSON carries {"report", "table"}. */
ABFLUX_API ab_status ab_tendency_grid_render(const ab_tendency_grid* g, ab_format format,
                                             char** out);
ABFLUX_API ab_status ab_tendency_grid_svg(const ab_tendency_grid* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ABFLUX_ABFLUX_H */
