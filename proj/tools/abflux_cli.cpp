// abflux: command-line front end over the abflux C library.
//
//   abflux spectrum      --nu -1 --lambda -1 --mu0 0.5 --n-max 2 --q-max 0 --k 0
//   abflux compare-well  --gamma 2.5 --n-max 10 --svg fig1.svg
//   abflux tendency      --nu 2 --lambda 1 --mu0 0.5 --n-max 8 --q-max 8
//   abflux verify-action --nu -1 --lambda -1 --energy -0.25
//   abflux quantize      --nu 1 --lambda 1 --gamma 0.5 --n 0
//   abflux shoot         --nu 1 --lambda 1 --gamma 0 --n 0
//   abflux zeros         --order 3 --count 5
//
// Exit codes: 0 success, 2 usage or domain error, 3 numeric non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <abflux/abflux.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <thread>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

struct Failure {
  int code;
  std::string message;
};

void check(ab_status status) {
  if (status == AB_OK) return;
  const int code = status == AB_ERR_CONVERGENCE ? kExitConvergence
                   : status == AB_ERR_INTERNAL  ? 1
                                                : kExitUsage;
  throw Failure{code, ab_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

struct CString {
  char* p = nullptr;
  ~CString() { ab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct PotentialDeleter {
  void operator()(ab_potential* p) const { ab_potential_free(p); }
};
using PotentialPtr = std::unique_ptr<ab_potential, PotentialDeleter>;

double output_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return output_number(*v);
}

struct Options {
  std::string nu = "";
  std::optional<double> lambda;
  double radius = 1.0;
  double mu0 = 0.0;
  double gamma = 0.0;
  int n = 0;
  int n_max = 5;
  int q_max = 0;
  int k = 0;
  std::string k_range;
  std::string units = "reduced";
  std::string format = "csv";
  std::string svg_path;
  std::string out_path;
  double energy = std::numeric_limits<double>::quiet_NaN();
  double order = 0.0;
  int count = 5;
  std::string maslov;
  double quad_tol = 1e-12;
  double root_tol = 1e-12;
  ab_shooting_config shooting{};
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) usage("cannot open '" + path + "' for writing");
  file << text;
  if (!file) usage("failed writing '" + path + "'");
}

double parse_double(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    usage(std::string("invalid value for ") + what + ": '" + text + "'");
  }
  if (pos != text.size()) usage(std::string("invalid value for ") + what + ": '" + text + "'");
  return v;
}

PotentialPtr make_potential(const Options& o) {
  if (o.nu.empty()) usage("--nu is required");
  ab_potential* p = nullptr;
  if (o.nu == "inf" || o.nu == "infinity") {
    check(ab_potential_infinite_well(o.radius, &p));
  } else {
    const double nu = parse_double(o.nu, "--nu");
    const double lambda = o.lambda ? *o.lambda : (nu < 0 ? -1.0 : 1.0);
    check(ab_potential_power_law(lambda, nu, &p));
  }
  return PotentialPtr(p);
}

ab_units parse_units(const std::string& name) {
  ab_units units{};
  check(ab_parse_units(name.c_str(), &units));
  return units;
}

ab_format parse_format(const std::string& name) {
  if (name == "csv") return AB_FORMAT_CSV;
  if (name == "json") return AB_FORMAT_JSON;
  usage("--format must be csv or json");
}

std::pair<int, int> k_window(const Options& o) {
  if (o.k_range.empty()) return {o.k, o.k};
  const auto dots = o.k_range.find("..");
  if (dots == std::string::npos) usage("--k-range must look like lo..hi");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const std::string lo_text = o.k_range.substr(0, dots);
    const std::string hi_text = o.k_range.substr(dots + 2);
    const int lo = std::stoi(lo_text, &a);
    const int hi = std::stoi(hi_text, &b);
    if (a != lo_text.size() || b != hi_text.size()) throw std::invalid_argument("k-range");
    if (lo > hi) usage("--k-range: lo must not exceed hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    usage("--k-range must look like lo..hi with integer bounds");
  }
}

unsigned worker_count() {
  const char* env = std::getenv("ABFLUX_WORKERS");
  if (env == nullptr || *env == '\0') {
    return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  }
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 256) usage("ABFLUX_WORKERS must be an integer in [1, 256]");
  return static_cast<unsigned>(v);
}

int run_spectrum(const Options& o) {
  const auto potential = make_potential(o);
  const auto [k_lo, k_hi] = k_window(o);
  const ab_format format = parse_format(o.format);
  ab_spectrum_table* raw = nullptr;
  check(ab_spectrum_table_create(potential.get(), o.mu0, o.n_max, o.q_max, k_lo, k_hi,
                                 parse_units(o.units), worker_count(), &raw));
  std::unique_ptr<ab_spectrum_table, void (*)(ab_spectrum_table*)> table(raw,
                                                                         ab_spectrum_table_free);
  CString text;
  check(ab_spectrum_table_render(table.get(), format, &text.p));
  if (!o.svg_path.empty()) {
    CString svg;
    check(ab_spectrum_table_svg(table.get(), &svg.p));
    write_output(o.svg_path, svg.str());
  }
  write_output(o.out_path, text.str());
  return 0;
}

int run_compare_well(const Options& o) {
  const ab_format format = parse_format(o.format);
  ab_well_comparison* raw = nullptr;
  check(ab_well_comparison_create(o.gamma, o.n_max, &raw));
  std::unique_ptr<ab_well_comparison, void (*)(ab_well_comparison*)> cmp(raw,
                                                                         ab_well_comparison_free);
  CString text;
  check(ab_well_comparison_render(cmp.get(), format, &text.p));
  if (!o.svg_path.empty()) {
    CString svg;
    check(ab_well_comparison_svg(cmp.get(), &svg.p));
    write_output(o.svg_path, svg.str());
  }
  write_output(o.out_path, text.str());
  return 0;
}

int run_tendency(const Options& o, bool units_given) {
  const auto potential = make_potential(o);
  const ab_format format = parse_format(o.format);
  ab_units units = AB_UNITS_REDUCED;
  if (units_given) {
    units = parse_units(o.units);
  } else {
    check(ab_default_units(potential.get(), &units));
  }
  ab_tendency_grid* raw = nullptr;
  check(ab_tendency_grid_create(potential.get(), o.mu0, o.k, o.n_max, o.q_max, units,
                                worker_count(), &raw));
  std::unique_ptr<ab_tendency_grid, void (*)(ab_tendency_grid*)> grid(raw, ab_tendency_grid_free);
  CString text;
  check(ab_tendency_grid_render(grid.get(), format, &text.p));
  if (!o.svg_path.empty()) {
    CString svg;
    check(ab_tendency_grid_svg(grid.get(), &svg.p));
    write_output(o.svg_path, svg.str());
  }
  write_output(o.out_path, text.str());
  return 0;
}

void write_json(const Options& o, const json& doc) { write_output(o.out_path, doc.dump(2) + "\n"); }

json potential_json(const ab_potential* p) {
  CString text;
  check(ab_potential_describe(p, &text.p));
  return text.str();
}

int run_verify_action(const Options& o) {
  if (std::isnan(o.energy)) usage("--energy is required");
  const auto potential = make_potential(o);
  double rc = 0.0;
  double numeric = 0.0;
  check(ab_turning_point(o.energy, potential.get(), &rc));
  check(ab_action_integral_numeric(o.energy, potential.get(), o.quad_tol, &numeric));
  std::optional<double> closed;
  std::optional<double> rel_err;
  double nu = 0.0;
  check(ab_potential_exponent(potential.get(), &nu));
  if (nu < 0) {
    const double lambda = o.lambda ? *o.lambda : -1.0;
    double c = 0.0;
    check(ab_action_integral_closed(o.energy, lambda, nu, &c));
    closed = c;
    rel_err = std::abs(numeric - c) / std::abs(c);
  }
  json doc;
  doc["potential"] = potential_json(potential.get());
  doc["energy"] = output_number(o.energy);
  doc["turning_point"] = output_number(rc);
  doc["numeric"] = output_number(numeric);
  doc["closed"] = number_or_null(closed);
  doc["rel_err"] = rel_err ? json(*rel_err < 1e-300 ? 0.0 : output_number(*rel_err)) : json();
  write_json(o, doc);
  return 0;
}

ab_quantize_options quantize_options(const Options& o) {
  ab_quantize_options opts;
  ab_quantize_options_default(&opts);
  opts.quadrature_tolerance = o.quad_tol;
  opts.root_tolerance = o.root_tol;
  if (!o.maslov.empty()) {
    opts.use_maslov = 1;
    if (o.maslov == "smooth-smooth") {
      opts.maslov = AB_MASLOV_SMOOTH_SMOOTH;
    } else if (o.maslov == "smooth-wall") {
      opts.maslov = AB_MASLOV_SMOOTH_WALL;
    } else if (o.maslov == "wall-wall") {
      opts.maslov = AB_MASLOV_WALL_WALL;
    } else {
      usage("--maslov must be smooth-smooth, smooth-wall or wall-wall");
    }
  }
  return opts;
}

int run_quantize(const Options& o) {
  const auto potential = make_potential(o);
  const auto opts = quantize_options(o);
  double constant = 0.0;
  double energy = 0.0;
  double closed = 0.0;
  check(ab_quantization_constant(potential.get(), o.gamma, &opts, &constant));
  check(ab_quantize_energy(potential.get(), o.gamma, o.n, &opts, &energy));
  check(ab_closed_form_energy(potential.get(), o.n, o.gamma, &closed));
  json doc;
  doc["potential"] = potential_json(potential.get());
  doc["gamma"] = output_number(o.gamma);
  doc["n"] = o.n;
  doc["constant"] = output_number(constant);
  doc["energy"] = output_number(energy);
  doc["closed_form"] = output_number(closed);
  doc["rel_diff"] = output_number(std::abs(energy - closed) / std::abs(closed));
  write_json(o, doc);
  return 0;
}

int run_shoot(const Options& o) {
  const auto potential = make_potential(o);
  ab_shooting_result r{};
  check(ab_shoot(potential.get(), o.gamma, o.n, &o.shooting, &r));
  double closed = 0.0;
  check(ab_closed_form_energy(potential.get(), o.n, o.gamma, &closed));
  json doc;
  doc["potential"] = potential_json(potential.get());
  doc["gamma"] = output_number(o.gamma);
  doc["n"] = o.n;
  doc["energy"] = output_number(r.energy);
  doc["semiclassical"] = output_number(closed);
  doc["nodes"] = r.nodes;
  doc["r_min"] = output_number(r.r_min);
  doc["r_max"] = output_number(r.r_max);
  doc["grid_points"] = r.grid_points;
  write_json(o, doc);
  return 0;
}

int run_zeros(const Options& o) {
  if (o.count < 1) usage("--count must be >= 1");
  json zeros = json::array();
  for (int m = 1; m <= o.count; ++m) {
    double z = 0.0;
    check(ab_bessel_j_zero(o.order, m, &z));
    zeros.push_back(output_number(z));
  }
  json doc;
  doc["order"] = output_number(o.order);
  doc["zeros"] = std::move(zeros);
  write_json(o, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  ab_shooting_config_default(&o.shooting);

  CLI::App app{"Semiclassical spectra of V(r) = lambda r^nu with an Aharonov-Bohm flux"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--nu", o.nu, "Power-law exponent, or 'inf' for the infinite well");
  app.add_option("--lambda", o.lambda, "Coupling (default -1 for nu < 0, +1 for nu > 0)");
  app.add_option("--a", o.radius, "Infinite-well radius")->capture_default_str();
  app.add_option("--mu0", o.mu0, "Flux parameter mu0")->capture_default_str();
  app.add_option("--gamma", o.gamma, "Effective angular momentum q + |k + mu0|")
      ->capture_default_str();
  app.add_option("--n", o.n, "Radial quantum number")->capture_default_str();
  auto* n_max_opt = app.add_option("--n-max", o.n_max, "Largest radial quantum number")
                        ->capture_default_str();
  auto* q_max_opt =
      app.add_option("--q-max", o.q_max, "Largest angular quantum number")->capture_default_str();
  auto* k_opt = app.add_option("--k", o.k, "Magnetic quantum number")->capture_default_str();
  auto* k_range_opt = app.add_option("--k-range", o.k_range, "Window of k values, lo..hi");
  k_opt->excludes(k_range_opt);
  auto* units_opt =
      app.add_option("--units", o.units, "reduced|fig1|fig2a|fig2b|fig2c|fig2d")
          ->check(CLI::IsMember({"reduced", "fig1", "fig2a", "fig2b", "fig2c", "fig2d"}));
  app.add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--svg", o.svg_path, "Also write an SVG plot to this path");
  app.add_option("--out", o.out_path, "Write output here instead of stdout");
  app.add_option("--energy", o.energy, "Energy for verify-action (reduced units)");
  app.add_option("--order", o.order, "Bessel order for zeros")->capture_default_str();
  app.add_option("--count", o.count, "Number of zeros")->capture_default_str();
  app.add_option("--maslov", o.maslov, "Override constant: smooth-smooth|smooth-wall|wall-wall");
  app.add_option("--quad-tol", o.quad_tol, "Quadrature relative tolerance")->capture_default_str();
  app.add_option("--root-tol", o.root_tol, "Root-finding relative tolerance")
      ->capture_default_str();
  app.add_option("--shoot-step", o.shooting.step, "Shooting grid step in ln r")
      ->capture_default_str();
  app.add_option("--shoot-min-points", o.shooting.min_points, "Minimum shooting grid points")
      ->capture_default_str();
  app.add_option("--shoot-r-min-factor", o.shooting.r_min_factor, "Inner radius factor")
      ->capture_default_str();
  app.add_option("--shoot-turning-multiplier", o.shooting.turning_multiplier,
                 "Box size in turning radii")
      ->capture_default_str();
  app.add_option("--shoot-decay-lengths", o.shooting.decay_lengths,
                 "Box padding in decay lengths")
      ->capture_default_str();
  app.add_option("--shoot-energy-tol", o.shooting.energy_tolerance, "Shooting energy tolerance")
      ->capture_default_str();
  app.add_option("--shoot-max-bisections", o.shooting.max_bisections, "Bisection limit")
      ->capture_default_str();
  app.add_option("--shoot-max-box-enlargements", o.shooting.max_box_enlargements,
                 "Box enlargement limit")
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum over an (n, q, k) grid");
  auto* compare = app.add_subcommand("compare-well", "Exact vs semiclassical infinite-well levels");
  auto* tendency = app.add_subcommand("tendency", "E(n, q) grid with its shape report");
  auto* verify = app.add_subcommand("verify-action", "Numeric vs closed-form action integral");
  auto* quantize = app.add_subcommand("quantize", "Solve the quantization rule numerically");
  auto* shoot = app.add_subcommand("shoot", "Numerov shooting eigenvalue");
  auto* zeros = app.add_subcommand("zeros", "Positive zeros of J_order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "abflux: error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(o);
    if (*compare) {
      if (n_max_opt->count() == 0) o.n_max = 10;
      if (app.get_option("--gamma")->count() == 0) o.gamma = 2.5;
      return run_compare_well(o);
    }
    if (*tendency) {
      if (n_max_opt->count() == 0) o.n_max = 8;
      if (q_max_opt->count() == 0) o.q_max = 8;
      return run_tendency(o, units_opt->count() > 0);
    }
    if (*verify) return run_verify_action(o);
    if (*quantize) return run_quantize(o);
    if (*shoot) return run_shoot(o);
    if (*zeros) return run_zeros(o);
  } catch (const Failure& f) {
    std::cerr << "abflux: error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "abflux: error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
