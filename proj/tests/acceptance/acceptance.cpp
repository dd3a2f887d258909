// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Usage: acceptance --cli PATH_TO_ABFLUX

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "action.hpp"
#include "analysis.hpp"
#include "closed_form.hpp"
#include "model.hpp"
#include "oracles.hpp"
#include "reference.hpp"
#include "reports.hpp"
#include "special_functions.hpp"

using namespace abflux;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool ok = true;
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double gamma_of(int q, int k, double mu0) { return q + std::abs(k + mu0); }

PotentialSpec potential_for(double nu) {
  if (std::isinf(nu)) return PotentialSpec::infinite_well(1.0);
  return PotentialSpec::power_law(nu < 0.0 ? -1.0 : 1.0, nu);
}

const double kMu0s[] = {0.0, 0.3, 0.5, 1.7};

Outcome coulomb_identity() {
  double worst = 0.0;
  for (double mu0 : kMu0s)
    for (int n = 0; n <= 5; ++n)
      for (int q = 0; q <= 5; ++q)
        for (int k = -3; k <= 3; ++k) {
          const double big_n = n + q + std::abs(k + mu0) + 1.0;
          const double exact = -1.0 / (4.0 * big_n * big_n);
          worst = std::max(worst,
                           rel(energy_negative_power(n, gamma_of(q, k, mu0), -1.0, -1.0), exact));
        }
  return {worst <= 1e-12, "max rel err " + fmt("%.3g", worst)};
}

Outcome oscillator_identity() {
  double worst = 0.0;
  for (double lambda : {1.0, 2.25})
    for (double mu0 : kMu0s)
      for (int n = 0; n <= 5; ++n)
        for (int q = 0; q <= 5; ++q)
          for (int k = -3; k <= 3; ++k) {
            const double omega = 2.0 * std::sqrt(lambda);
            const double g = gamma_of(q, k, mu0);
            const double exact = (2.0 * n + g + 1.5) * omega;
            worst = std::max(worst, rel(energy_positive_power(n, g, lambda, 2.0), exact));
          }
  return {worst <= 1e-12, "max rel err " + fmt("%.3g", worst)};
}

Outcome action_identity() {
  double worst = 0.0;
  for (double nu : {-1.5, -1.0, -0.5}) {
    const auto p = PotentialSpec::power_law(-1.0, nu);
    for (int i = 0; i < 20; ++i) {
      const double energy = -std::pow(10.0, -2.0 + 3.0 * i / 19.0);
      worst = std::max(worst, rel(action_integral_numeric(energy, p),
                                  action_integral_closed(energy, -1.0, nu)));
    }
  }
  const double spot =
      std::abs(action_integral_numeric(-0.25, PotentialSpec::power_law(-1.0, -1.0)) - kPi);
  return {worst <= 1e-8 && spot <= 1e-10,
          "max rel err " + fmt("%.3g", worst) + ", |I - pi| " + fmt("%.3g", spot)};
}

Outcome quantization_round_trip() {
  double worst = 0.0;
  for (double nu : {-1.5, -1.0, -0.5, 1.0, 2.0, 4.0}) {
    const auto p = potential_for(nu);
    for (double g : {0.0, 0.5, 2.5}) {
      for (int n = 0; n <= 5; ++n) {
        QuantizationSetup setup{p, g};
        worst = std::max(worst, rel(quantize_energy(setup, n), closed_form_energy(p, n, g)));
      }
    }
  }
  return {worst <= 1e-8, "max rel err " + fmt("%.3g", worst)};
}

Outcome figure_one() {
  const auto cmp = compare_well(2.5, 10);
  bool ok = cmp.rows.size() == 11;
  for (std::size_t i = 0; ok && i < cmp.rows.size(); ++i) {
    ok = cmp.rows[i].diff > 0.0 && (i == 0 || cmp.rows[i].diff < cmp.rows[i - 1].diff);
  }
  if (!ok) return {false, "diff not positive and decreasing"};
  const double first = cmp.rows.front().diff;
  const double last = cmp.rows.back().diff;
  const double z = ref::bessel_j_zero(3.0, 1) / kPi;
  const double oracle = 5.0625 - z * z;
  const double asymptote = 35.0 / (4.0 * kPi * kPi);
  ok = std::abs(first - 0.938) <= 0.002 && std::abs(first - oracle) < 1e-9 &&
       std::abs(last - asymptote) < 0.01;
  return {ok, "diff[0] " + fmt("%.6f", first) + " (oracle " + fmt("%.6f", oracle) +
                  "), diff[10] " + fmt("%.6f", last) + " vs " + fmt("%.6f", asymptote)};
}

Outcome linear_potential() {
  const auto p = PotentialSpec::power_law(1.0, 1.0);
  const double ground = shoot_eigenvalue(p, 0.0, 0);
  const double semi = closed_form_energy(p, 0, 0.0);
  bool ok = std::abs(ground - 2.338107) <= 1e-5 && std::abs(ground + ref::airy_zero(1)) <= 1e-6 &&
            std::abs(semi - 2.320251) <= 5e-7;
  double prev = kInf;
  std::string errs;
  for (int n = 0; n <= 5; ++n) {
    const double e = n == 0 ? ground : shoot_eigenvalue(p, 0.0, n);
    const double err = rel(closed_form_energy(p, n, 0.0), e);
    ok = ok && err < prev && (n > 0 || err < 0.01);
    prev = err;
    errs += (n ? " " : "") + fmt("%.2e", err);
  }
  return {ok, "E0 " + fmt("%.7f", ground) + ", semiclassical " + fmt("%.6f", semi) +
                  ", rel errs " + errs};
}

Outcome shooting_vs_exact() {
  const double coulomb = shoot_eigenvalue(PotentialSpec::power_law(-1.0, -1.0), 1.5, 0);
  const double osc = shoot_eigenvalue(PotentialSpec::power_law(1.0, 2.0), 0.0, 0);
  const double a = std::abs(coulomb + 0.04);
  const double b = std::abs(osc - 3.0);
  return {a <= 1e-6 && b <= 1e-6, "|dE| " + fmt("%.2e", a) + " and " + fmt("%.2e", b)};
}

int expected_sign(Curvature c) {
  return c == Curvature::BendsDown ? -1 : c == Curvature::BendsUp ? 1 : 0;
}

int sign_of(double v, double scale) {
  if (std::abs(v) <= 1e-9 * scale) return 0;
  return v > 0.0 ? 1 : -1;
}

Outcome section_three() {
  std::string failed;
  // First differences, including exponents outside the curvature set.
  for (double nu : {-1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0, kInf}) {
    const auto p = potential_for(nu);
    for (double mu0 : kMu0s)
      for (int n = 0; n < 5; ++n)
        for (int q = 0; q < 5; ++q)
          for (int k = 0; k < 3; ++k) {
            const double e = closed_form_energy(p, n, gamma_of(q, k, mu0));
            if (!(closed_form_energy(p, n + 1, gamma_of(q, k, mu0)) > e) ||
                !(closed_form_energy(p, n, gamma_of(q + 1, k, mu0)) > e) ||
                !(closed_form_energy(p, n, gamma_of(q, k + 1, mu0)) > e)) {
              failed = "first difference at nu=" + fmt("%g", nu);
            }
          }
  }
  // Second differences against the classification.
  for (double nu : {-1.0, 1.0, 2.0, kInf}) {
    const auto p = potential_for(nu);
    const int want = expected_sign(tendency_classify(nu));
    for (double mu0 : {0.5, 1.7})
      for (int n = 1; n < 5; ++n)
        for (int q = 1; q < 5; ++q) {
          const int k = 1;
          auto e = [&](int dn, int dq, int dk) {
            return closed_form_energy(p, n + dn, gamma_of(q + dq, k + dk, mu0));
          };
          const double scale = std::abs(e(0, 0, 0));
          const double d2n = e(1, 0, 0) - 2 * e(0, 0, 0) + e(-1, 0, 0);
          const double d2q = e(0, 1, 0) - 2 * e(0, 0, 0) + e(0, -1, 0);
          const double d2k = e(0, 0, 1) - 2 * e(0, 0, 0) + e(0, 0, -1);
          if (sign_of(d2n, scale) != want || sign_of(d2q, scale) != want ||
              sign_of(d2k, scale) != want) {
            failed = "second difference at nu=" + fmt("%g", nu);
          }
        }
    const auto report = tendency_report(p, 0.5, 1, 6, 6);
    if (!report.curvature_consistent) failed = "tendency report at nu=" + fmt("%g", nu);
  }
  // Derivative ratios n:q, n:|k+mu0|, q:|k+mu0|.
  double worst_ratio = 0.0;
  for (double nu : {-1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0, kInf}) {
    const auto p = potential_for(nu);
    const double expected = nu < 0.0 ? nu + 2.0 : 2.0;
    for (SpectralPoint pt : {SpectralPoint{0, 0, 1}, SpectralPoint{2, 1, 0}, SpectralPoint{4, 3, 2}}) {
      const double dn = spectral_derivative(p, 0.5, pt, Variable::N, 1);
      const double dq = spectral_derivative(p, 0.5, pt, Variable::Q, 1);
      const double dk = spectral_derivative(p, 0.5, pt, Variable::Kmu, 1);
      worst_ratio = std::max({worst_ratio, std::abs(dn / dq - expected),
                              std::abs(dn / dk - expected), std::abs(dq / dk - 1.0)});
    }
  }
  if (worst_ratio > 1e-6) failed = "derivative ratios";
  // Mixed derivative d^2E/(dn d|k+mu0|).
  const SpectralPoint pt{1, 1, 0};
  const double lin = spectral_mixed_derivative(potential_for(1.0), 0.5, pt);
  const double osc = spectral_mixed_derivative(potential_for(2.0), 0.5, pt);
  const double well = spectral_mixed_derivative(potential_for(kInf), 0.5, pt);
  if (!(lin < 0.0) || !(std::abs(osc) < 1e-6) || !(well > 0.0)) failed = "mixed derivative signs";
  return {failed.empty(), failed.empty() ? "ratio err " + fmt("%.2e", worst_ratio) +
                                               ", mixed " + fmt("%.3g", lin) + "/" +
                                               fmt("%.1g", osc) + "/" + fmt("%.3g", well)
                                         : failed};
}

Outcome flux_periodicity() {
  // Bitwise where mu0 + 1 is representable. Otherwise the shifted input is a
  // different double, so only closeness can hold.
  std::string failed;
  double worst_shift = 0.0;
  for (double nu : {-1.5, -1.0, -0.5, 1.0, 2.0, 4.0, kInf}) {
    const auto p = potential_for(nu);
    for (double mu0 : {0.0, 0.5, 0.25, 1.75, -0.375, 0.3, 1.7}) {
      const bool dyadic = (mu0 + 1.0) - 1.0 == mu0;
      for (int n = 0; n <= 3; ++n)
        for (int q = 0; q <= 3; ++q)
          for (int k = -3; k <= 3; ++k) {
            const double a = closed_form_energy(p, n, effective_gamma(q, k, mu0));
            const double b = closed_form_energy(p, n, effective_gamma(q, k - 1, mu0 + 1.0));
            if (!dyadic) worst_shift = std::max(worst_shift, rel(b, a));
            const bool same = dyadic ? a == b : rel(b, a) <= 1e-12;
            if (!same) failed = "shift at nu=" + fmt("%g", nu) + " mu0=" + fmt("%g", mu0);
          }
    }
  }
  // Integer mu0: the window k in [-K - mu0, K - mu0] reproduces mu0 = 0 over [-K, K].
  const auto coulomb = PotentialSpec::power_law(-1.0, -1.0);
  const int big_k = 4;
  auto levels = [&](int mu0) {
    const auto t = spectrum_table(coulomb, mu0, GridRange{4, 3, -big_k - mu0, big_k - mu0});
    std::vector<double> e;
    for (const auto& r : t.rows) e.push_back(r.energy);
    std::sort(e.begin(), e.end());
    return e;
  };
  const auto pure = levels(0);
  double worst = 0.0;
  for (int mu0 : {1, 2, 5, -3}) {
    const auto shifted = levels(mu0);
    if (shifted.size() != pure.size()) return {false, "window sizes differ"};
    for (std::size_t i = 0; i < pure.size(); ++i) worst = std::max(worst, rel(shifted[i], pure[i]));
  }
  if (worst > 1e-12) failed = "integer mu0 multiset";
  return {failed.empty(), failed.empty() ? "dyadic mu0 bitwise, others " + fmt("%.2g", worst_shift) +
                                               ", multiset rel err " + fmt("%.2g", worst)
                                         : failed};
}

Outcome special_functions() {
  double zeros = 0.0;
  for (int m = 1; m <= 20; ++m) zeros = std::max(zeros, std::abs(bessel_j_zero(0.5, m) - m * kPi));
  double recurrence = 0.0;
  for (double x = 0.1; x < 20.0; x += 0.37) {
    recurrence = std::max(recurrence, rel(abflux::gamma(x + 1.0), x * abflux::gamma(x)));
  }
  const double half = std::abs(abflux::gamma(0.5) - std::sqrt(kPi));
  double residual = 0.0;
  for (double order : {0.0, 1.0, 2.5, 3.0, 7.5, 12.0})
    for (int m = 1; m <= 10; ++m)
      residual = std::max(residual, std::abs(ref::bessel_j(order, bessel_j_zero(order, m))));
  return {zeros <= 1e-10 && recurrence <= 1e-12 && half <= 1e-12 && residual <= 1e-8,
          "zeros " + fmt("%.1e", zeros) + ", recurrence " + fmt("%.1e", recurrence) +
              ", Gamma(1/2) " + fmt("%.1e", half) + ", residual " + fmt("%.1e", residual)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};
  const auto dir = fs::temp_directory_path() / ("abflux_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands = {
      "spectrum --nu -1 --lambda -1 --mu0 0.3 --n-max 5 --q-max 3 --k-range -3..3",
      "spectrum --nu 1.5 --lambda 2 --mu0 0.5 --n-max 6 --q-max 4 --k-range -2..2 --format json",
      "compare-well --gamma 2.5 --n-max 10",
      "compare-well --gamma 2.5 --n-max 10 --format json",
      "tendency --nu inf --mu0 0.5 --n-max 6 --q-max 6",
      "tendency --nu -1 --lambda -1 --mu0 0.5 --n-max 6 --q-max 6 --format json",
  };
  int compared = 0;
  std::string failed;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "1", "6"}) {
      const auto out = dir / "out";
      const auto svg = dir / "plot.svg";
      fs::remove(out);
      fs::remove(svg);
      const std::string cmd = std::string("ABFLUX_WORKERS=") + workers + " '" + cli + "' " +
                              commands[c] + " --out '" + out.string() + "' --svg '" +
                              svg.string() + "' 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        failed = "command failed: " + commands[c];
        break;
      }
      outputs.push_back(slurp(out) + "\n--svg--\n" + slurp(svg));
    }
    if (!failed.empty()) break;
    for (const auto& o : outputs) {
      if (o != outputs.front() || o.size() < 100) failed = "output differs: " + commands[c];
    }
    ++compared;
  }
  fs::remove_all(dir);
  return {failed.empty(), failed.empty() ? std::to_string(compared) +
                                               " commands, CSV/JSON and SVG byte-identical"
                                         : failed};
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Coulomb identity", coulomb_identity},
      {"oscillator identity", oscillator_identity},
      {"action identity", action_identity},
      {"quantization round trip", quantization_round_trip},
      {"infinite well comparison", figure_one},
      {"linear potential against shooting", linear_potential},
      {"shooting against exact levels", shooting_vs_exact},
      {"spectral tendency properties", section_three},
      {"flux periodicity", flux_periodicity},
      {"special functions", special_functions},
      {"CLI determinism", [&] { return determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto result = guarded(criteria[i].second);
    failures += !result.ok;
    std::printf("%s [%zu] %s: %s\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), result.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
