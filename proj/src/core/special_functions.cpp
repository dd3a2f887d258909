#include "special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"

namespace abflux {
namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

constexpr double kMaxGammaArg = 171.61447887182298;

double lanczos_series(double z) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return sum;
}

// Gamma(x) for x >= 0.5.
double gamma_upper(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  const double scale = std::sqrt(2.0 * std::numbers::pi) * lanczos_series(z);
  // t^(z+1/2) is split around exp(-t) so large arguments do not overflow early.
  return scale * half_power * std::exp(-t) * half_power;
}

double log_gamma_upper(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(z));
}

// (x/2)^order / Gamma(order + 1), the leading power-series coefficient.
double series_prefactor(double order, double x) {
  if (order == 0.0) return 1.0;
  return std::exp(order * std::log(0.5 * x) - log_gamma(order + 1.0));
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
  }
  if (x > kMaxGammaArg) {
    throw DomainError("gamma: result overflows for argument " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_upper(1.0 - x));
  }
  return gamma_upper(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           log_gamma_upper(1.0 - x);
  }
  return log_gamma_upper(x);
}

double gamma_ratio(double a, double b) {
  if (a < 100.0 && b < 100.0) return gamma(a) / gamma(b);
  return std::exp(log_gamma(a) - log_gamma(b));
}

namespace detail {

std::pair<double, double> bessel_j_series(double order, double x) {
  const double q = -0.25 * x * x;
  auto sum_series = [q](double nu, double first) {
    double term = first;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
      term *= q / (k * (nu + k));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
  };
  const double lead = series_prefactor(order, x);
  return {sum_series(order, lead), sum_series(order + 1.0, lead * 0.5 * x / (order + 1.0))};
}

// Miller's backward recurrence, normalized with the Neumann series
//   (x/2)^nu / Gamma(nu+1) = sum_k c_k J_{nu+2k}(x),
//   c_0 = 1,  c_k = (nu+2k) Gamma(nu+k) / (k! Gamma(nu+1)).
std::pair<double, double> bessel_j_backward(double order, double x) {
  int top = static_cast<int>(std::max(x, order) + 40.0 + 10.0 * std::sqrt(x));
  if (top % 2 != 0) ++top;

  // p_k = Gamma(nu+k) / (k! Gamma(nu+1)), k >= 1
  std::vector<double> weight(top / 2 + 1, 0.0);
  weight[0] = 1.0;
  double p = 1.0;
  for (int k = 1; k <= top / 2; ++k) {
    if (k > 1) p *= (order + k - 1) / k;
    weight[k] = (order + 2.0 * k) * p;
  }

  double above = 0.0;   // f_{i+1}
  double current = 1e-30;  // f_i
  double norm_sum = weight[top / 2] * current;
  for (int i = top; i >= 1; --i) {
    const double below = 2.0 * (order + i) / x * current - above;
    above = current;
    current = below;
    if ((i - 1) % 2 == 0) norm_sum += weight[(i - 1) / 2] * current;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      above *= 1e-250;
      norm_sum *= 1e-250;
    }
  }
  const double scale = series_prefactor(order, x) / norm_sum;
  return {current * scale, above * scale};
}

// Hankel's large-argument expansion.
std::pair<double, double> bessel_j_asymptotic(double order, double x) {
  auto evaluate = [x](double nu) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
      const double odd = 2.0 * k - 1.0;
      term *= (mu - odd * odd) / (k * 8.0 * x);
      if (std::abs(term) > std::abs(previous) && k > 2) break;  // series turned divergent
      switch (k % 4) {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        default: p += term; break;
      }
      if (std::abs(term) < 1e-17) break;
      previous = term;
    }
    const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
  };
  return {evaluate(order), evaluate(order + 1.0)};
}

}  // namespace detail

namespace {

std::pair<double, double> bessel_j_pair(double order, double x) {
  if (x == 0.0) return {order == 0.0 ? 1.0 : 0.0, 0.0};
  if (x <= 2.0 || x * x <= order + 1.0) return detail::bessel_j_series(order, x);
  if (x >= 25.0 && x >= 0.25 * order * order) return detail::bessel_j_asymptotic(order, x);
  return detail::bessel_j_backward(order, x);
}

void check_order(double order, const char* where) {
  if (!(order >= 0.0) || !std::isfinite(order)) {
    throw DomainError(std::string(where) + ": order must be finite and >= 0");
  }
}

}  // namespace

double bessel_j(double order, double x) {
  check_order(order, "bessel_j");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_j: argument must be finite and >= 0, got " + std::to_string(x));
  }
  return bessel_j_pair(order, x).first;
}

double bessel_j_zero(double order, int m) {
  check_order(order, "bessel_j_zero");
  if (m < 1) throw DomainError("bessel_j_zero: zero index must be >= 1");

  // Consecutive zeros of J_order are more than 2.4 apart for order >= 0 and
  // none lies below order, so a 0.5 march from there brackets each one.
  constexpr double kStep = 0.5;
  double lo = std::max(order, 1e-3);
  double f_lo = bessel_j(order, lo);
  int found = 0;
  double hi = lo;
  double f_hi = f_lo;
  for (int i = 0; i < 100000; ++i) {
    hi = lo + kStep;
    f_hi = bessel_j(order, hi);
    if (f_lo == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)) {
      if (++found == m) break;
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (found != m) throw ConvergenceError("bessel_j_zero: failed to bracket zero");
  if (f_lo == 0.0) return lo;

  // McMahon estimate as the Newton start, clamped into the bracket.
  const double beta = (m + 0.5 * order - 0.25) * std::numbers::pi;
  double x = beta - (4.0 * order * order - 1.0) / (8.0 * beta);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

  for (int iter = 0; iter < 100; ++iter) {
    const auto [j, j_next] = bessel_j_pair(order, x);
    if (j == 0.0) return x;
    if ((j < 0.0) == (f_lo < 0.0)) {
      lo = x;
    } else {
      hi = x;
    }
    const double derivative = order / x * j - j_next;
    double next = x - j / derivative;
    if (!(next > lo && next < hi) || derivative == 0.0) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * x || hi - lo <= 4e-16 * hi) return next;
    x = next;
  }
  throw ConvergenceError("bessel_j_zero: refinement did not converge");
}

}  // namespace abflux
