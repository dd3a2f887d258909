#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"
#include "model.hpp"
#include "reference.hpp"

using namespace abflux;

TEST_CASE("power-law validation") {
  CHECK_NOTHROW(PotentialSpec::power_law(-1.0, -1.0));
  CHECK_NOTHROW(PotentialSpec::power_law(-0.3, -1.9));
  CHECK_NOTHROW(PotentialSpec::power_law(2.0, 4.0));
  CHECK_THROWS_AS(PotentialSpec::power_law(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(-1.0, -2.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(-1.0, -2.5), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(0.0, 2.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(std::nan(""), 2.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::infinite_well(0.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::infinite_well(-1.0), DomainError);
}

TEST_CASE("potential accessors") {
  const auto coulomb = PotentialSpec::power_law(-1.0, -1.0);
  CHECK(coulomb.is_power_law());
  CHECK_FALSE(coulomb.is_well());
  CHECK(coulomb.exponent() == -1.0);
  CHECK(coulomb.value_at(4.0) == -0.25);
  CHECK(coulomb.binds_below_zero());
  CHECK_THROWS_AS(coulomb.well_params(), DomainError);

  const auto well = PotentialSpec::infinite_well(2.0);
  CHECK(well.is_well());
  CHECK(std::isinf(well.exponent()));
  CHECK(well.value_at(1.0) == 0.0);
  CHECK(std::isinf(well.value_at(3.0)));
  CHECK_FALSE(well.binds_below_zero());
  CHECK_THROWS_AS(well.power_law_params(), DomainError);

  CHECK(PotentialSpec::power_law(1.0, 2.0) == PotentialSpec::power_law(1.0, 2.0));
  CHECK_FALSE(PotentialSpec::power_law(1.0, 2.0) == PotentialSpec::power_law(1.0, 3.0));
  CHECK_FALSE(well == PotentialSpec::infinite_well(1.0));
}

TEST_CASE("effective gamma") {
  CHECK(effective_gamma(0, 0, 0.0) == 0.0);
  CHECK(effective_gamma(2, -3, 0.5) == 4.5);
  CHECK(effective_gamma(1, 2, -2.0) == 1.0);
  CHECK(FluxQuantumNumbers{3, 1, -1, 0.25}.gamma() == 1.75);
  CHECK_THROWS_AS(effective_gamma(-1, 0, 0.0), DomainError);
  CHECK_THROWS_AS(effective_gamma(0, 0, std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("flux shift by a whole quantum leaves gamma unchanged") {
  for (double mu0 : {0.0, 0.5, 0.25, 1.75, -0.375}) {
    for (int k = -4; k <= 4; ++k) {
      CHECK(effective_gamma(1, k - 1, mu0 + 1.0) == effective_gamma(1, k, mu0));
    }
  }
}

TEST_CASE("duality exponent map") {
  CHECK(dual_exponent(2.0) == -1.0);
  CHECK(dual_exponent(1.0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  for (double nu : {0.3, 1.0, 2.0, 4.0, 10.0}) {
    const double d = dual_exponent(nu);
    CHECK(d < 0.0);
    CHECK(d > -2.0);
    CHECK(dual_exponent(d) == doctest::Approx(nu).epsilon(1e-14));
  }
}

TEST_CASE("dual of an oscillator level is a hydrogen level") {
  // V = lambda r^2 maps to V' = lambda' / r with lambda' = -E/4 and
  // E' = -lambda/4; the hydrogen formula with the mapped gamma must give E'.
  const double lambda = 2.25;
  const double omega = 2.0 * std::sqrt(lambda);
  for (int n = 0; n <= 4; ++n) {
    for (double gamma : {0.0, 0.5, 1.3, 3.0}) {
      const double energy = omega * (2.0 * n + gamma + 1.5);
      const auto d = duality_map(2.0, energy, lambda, gamma);
      CHECK(d.nu == -1.0);
      CHECK(d.lambda == doctest::Approx(-energy / 4.0).epsilon(1e-15));
      CHECK(d.energy == doctest::Approx(-lambda / 4.0).epsilon(1e-15));
      const double big_n = n + d.gamma + 1.0;
      const double hydrogen = -d.lambda * d.lambda / (4.0 * big_n * big_n);
      CHECK(hydrogen == doctest::Approx(d.energy).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(duality_map(-1.0, 1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("Maslov constants") {
  CHECK(maslov_constant(Boundary::Smooth, Boundary::Smooth) == MaslovConstant::SmoothSmooth);
  CHECK(maslov_constant(Boundary::Wall, Boundary::Smooth) == MaslovConstant::SmoothWall);
  CHECK(maslov_constant(Boundary::Smooth, Boundary::Wall) == MaslovConstant::SmoothWall);
  CHECK(maslov_constant(Boundary::Wall, Boundary::Wall) == MaslovConstant::WallWall);
  CHECK(maslov_value(MaslovConstant::SmoothSmooth) == 0.5);
  CHECK(maslov_value(MaslovConstant::SmoothWall) == 0.75);
  CHECK(maslov_value(MaslovConstant::WallWall) == 1.0);
}

TEST_CASE("unit presets") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const auto well = PotentialSpec::infinite_well(2.0);
  CHECK(unit_scale(UnitPreset::Fig1, well).factor == doctest::Approx(4.0 / pi2));
  CHECK(unit_scale(UnitPreset::Fig2d, well).label == "hbar^2*pi^2/(2*m*a^2)");

  const auto coulomb = PotentialSpec::power_law(-2.0, -1.0);
  // Rydberg m e^4 / (2 hbar^2) = lambda^2 / 4 in reduced units.
  CHECK(unit_scale(UnitPreset::Fig2a, coulomb).factor == doctest::Approx(1.0));

  const auto linear = PotentialSpec::power_law(1.0, 1.0);
  CHECK(unit_scale(UnitPreset::Fig2b, linear).factor ==
        doctest::Approx(1.0 / std::cbrt(9.0 * pi2 / 4.0)));

  const auto osc = PotentialSpec::power_law(4.0, 2.0);
  CHECK(unit_scale(UnitPreset::Fig2c, osc).factor == doctest::Approx(0.25));
  CHECK(unit_scale(UnitPreset::Fig2c, osc).to_display(8.0) == doctest::Approx(2.0));

  CHECK(unit_scale(UnitPreset::Reduced, osc).factor == 1.0);
  CHECK_THROWS_AS(unit_scale(UnitPreset::Fig2a, osc), DomainError);
  CHECK_THROWS_AS(unit_scale(UnitPreset::Fig1, osc), DomainError);
  CHECK_THROWS_AS(unit_scale(UnitPreset::Fig2c, well), DomainError);

  CHECK(parse_unit_preset("fig2b") == UnitPreset::Fig2b);
  CHECK(unit_preset_name(UnitPreset::Fig2c) == "fig2c");
  CHECK_THROWS_AS(parse_unit_preset("furlongs"), DomainError);
  CHECK(default_figure_preset(well) == UnitPreset::Fig2d);
  CHECK(default_figure_preset(coulomb) == UnitPreset::Fig2a);
  CHECK(default_figure_preset(PotentialSpec::power_law(1.0, 3.0)) == UnitPreset::Reduced);
}
