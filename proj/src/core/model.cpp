#include "model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "errors.hpp"

namespace abflux {
namespace {

constexpr double kExcludedEndpointGap = 1e-6;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

PotentialSpec PotentialSpec::power_law(double lambda, double nu) {
  if (!std::isfinite(lambda) || !std::isfinite(nu)) {
    throw DomainError("power law: lambda and nu must be finite");
  }
  if (std::abs(nu) < kExcludedEndpointGap || std::abs(nu + 2.0) < kExcludedEndpointGap) {
    throw DomainError("power law: nu must stay away from 0 and -2 (valid ranges: "
                      "lambda<0 with -2<nu<0, or lambda>0 with nu>0)");
  }
  const bool attractive = lambda < 0.0 && nu > -2.0 && nu < 0.0;
  const bool confining = lambda > 0.0 && nu > 0.0;
  if (!attractive && !confining) {
    std::ostringstream msg;
    msg << "power law: (lambda=" << lambda << ", nu=" << nu
        << ") outside valid ranges (lambda<0 with -2<nu<0, or lambda>0 with nu>0)";
    throw DomainError(msg.str());
  }
  return PotentialSpec(PowerLaw{lambda, nu});
}

PotentialSpec PotentialSpec::infinite_well(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("infinite well: radius must be finite and > 0");
  }
  return PotentialSpec(InfiniteWell{radius});
}

const PowerLaw& PotentialSpec::power_law_params() const {
  if (!is_power_law()) throw DomainError("potential is not a power law");
  return std::get<PowerLaw>(shape_);
}

const InfiniteWell& PotentialSpec::well_params() const {
  if (!is_well()) throw DomainError("potential is not an infinite well");
  return std::get<InfiniteWell>(shape_);
}

double PotentialSpec::exponent() const {
  if (is_well()) return std::numeric_limits<double>::infinity();
  return std::get<PowerLaw>(shape_).nu;
}

double PotentialSpec::value_at(double r) const {
  if (is_well()) {
    return r < std::get<InfiniteWell>(shape_).radius ? 0.0
                                                     : std::numeric_limits<double>::infinity();
  }
  const auto& p = std::get<PowerLaw>(shape_);
  return p.lambda * std::pow(r, p.nu);
}

bool PotentialSpec::binds_below_zero() const {
  return is_power_law() && std::get<PowerLaw>(shape_).nu < 0.0;
}

std::string PotentialSpec::describe() const {
  std::ostringstream out;
  if (is_well()) {
    out << "infinite well (a=" << std::get<InfiniteWell>(shape_).radius << ")";
  } else {
    const auto& p = std::get<PowerLaw>(shape_);
    out << "power law (lambda=" << p.lambda << ", nu=" << p.nu << ")";
  }
  return out.str();
}

bool operator==(const PowerLaw& a, const PowerLaw& b) {
  return a.lambda == b.lambda && a.nu == b.nu;
}
bool operator==(const InfiniteWell& a, const InfiniteWell& b) { return a.radius == b.radius; }
bool operator==(const PotentialSpec& a, const PotentialSpec& b) { return a.shape_ == b.shape_; }

double FluxQuantumNumbers::gamma() const { return effective_gamma(q, k, mu0); }

double effective_gamma(int q, int k, double mu0) {
  if (q < 0) throw DomainError("effective_gamma: q must be >= 0");
  if (!std::isfinite(mu0)) throw DomainError("effective_gamma: mu0 must be finite");
  return q + std::abs(k + mu0);
}

double dual_exponent(double nu) { return -2.0 * nu / (2.0 + nu); }

DualParameters duality_map(double nu, double energy, double lambda, double gamma) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError("duality_map: nu must be > 0");
  }
  const double nu_dual = dual_exponent(nu);
  const double ratio_sq = (nu_dual / nu) * (nu_dual / nu);
  return DualParameters{
      .nu = nu_dual,
      .energy = -lambda * ratio_sq,
      .lambda = -energy * ratio_sq,
      .gamma = (2.0 * gamma + 1.0) / (nu + 2.0) - 0.5,
  };
}

MaslovConstant maslov_constant(Boundary left, Boundary right) {
  const int walls = (left == Boundary::Wall) + (right == Boundary::Wall);
  switch (walls) {
    case 0: return MaslovConstant::SmoothSmooth;
    case 1: return MaslovConstant::SmoothWall;
    default: return MaslovConstant::WallWall;
  }
}

double maslov_value(MaslovConstant constant) {
  switch (constant) {
    case MaslovConstant::SmoothSmooth: return 0.5;
    case MaslovConstant::SmoothWall: return 0.75;
    case MaslovConstant::WallWall: return 1.0;
  }
  return 0.5;
}

UnitScale unit_scale(UnitPreset preset, const PotentialSpec& potential) {
  auto require_power = [&](double nu, const char* name) -> const PowerLaw& {
    if (!potential.is_power_law() || !near(potential.power_law_params().nu, nu)) {
      throw DomainError(std::string("units ") + name + " require nu=" + std::to_string(nu));
    }
    return potential.power_law_params();
  };
  switch (preset) {
    case UnitPreset::Reduced:
      return {"reduced", 1.0};
    case UnitPreset::Fig1:
    case UnitPreset::Fig2d: {
      if (!potential.is_well()) {
        throw DomainError("units fig1/fig2d require the infinite well");
      }
      const double a = potential.well_params().radius;
      // hbar^2 pi^2 / (2 m a^2) = pi^2 / a^2
      return {"hbar^2*pi^2/(2*m*a^2)", a * a / (std::numbers::pi * std::numbers::pi)};
    }
    case UnitPreset::Fig2a: {
      // m c^2 alpha^2 / 2 = m e^4 / (2 hbar^2) = lambda^2 / 4 with lambda = -e^2
      const auto& p = require_power(-1.0, "fig2a");
      return {"m*c^2*alpha^2/2", 4.0 / (p.lambda * p.lambda)};
    }
    case UnitPreset::Fig2b: {
      const auto& p = require_power(1.0, "fig2b");
      const double scale =
          std::cbrt(9.0 * std::numbers::pi * std::numbers::pi * p.lambda * p.lambda / 4.0);
      return {"(9*pi^2*lambda^2*hbar^2/(8*m))^(1/3)", 1.0 / scale};
    }
    case UnitPreset::Fig2c: {
      // lambda = m omega^2 / 2 = omega^2 / 4
      const auto& p = require_power(2.0, "fig2c");
      return {"hbar*omega", 1.0 / (2.0 * std::sqrt(p.lambda))};
    }
  }
  return {"reduced", 1.0};
}

UnitPreset parse_unit_preset(std::string_view name) {
  if (name == "reduced") return UnitPreset::Reduced;
  if (name == "fig1") return UnitPreset::Fig1;
  if (name == "fig2a") return UnitPreset::Fig2a;
  if (name == "fig2b") return UnitPreset::Fig2b;
  if (name == "fig2c") return UnitPreset::Fig2c;
  if (name == "fig2d") return UnitPreset::Fig2d;
  throw DomainError("unknown unit preset '" + std::string(name) +
                    "' (expected reduced|fig1|fig2a|fig2b|fig2c|fig2d)");
}

std::string_view unit_preset_name(UnitPreset preset) {
  switch (preset) {
    case UnitPreset::Reduced: return "reduced";
    case UnitPreset::Fig1: return "fig1";
    case UnitPreset::Fig2a: return "fig2a";
    case UnitPreset::Fig2b: return "fig2b";
    case UnitPreset::Fig2c: return "fig2c";
    case UnitPreset::Fig2d: return "fig2d";
  }
  return "reduced";
}

UnitPreset default_figure_preset(const PotentialSpec& potential) {
  if (potential.is_well()) return UnitPreset::Fig2d;
  const double nu = potential.power_law_params().nu;
  if (near(nu, -1.0)) return UnitPreset::Fig2a;
  if (near(nu, 1.0)) return UnitPreset::Fig2b;
  if (near(nu, 2.0)) return UnitPreset::Fig2c;
  return UnitPreset::Reduced;
}

}  // namespace abflux
