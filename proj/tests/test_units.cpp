#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qlsurf/units.hpp"

using namespace qls::units;

namespace {

constexpr std::array kAllUnits = {
    Unit::eV,     Unit::meV,     Unit::kelvin,        Unit::THz,   Unit::GHz,
    Unit::MHz,    Unit::angstrom, Unit::nm,           Unit::bohr,  Unit::per_cm2,
    Unit::per_angstrom3, Unit::tesla, Unit::tesla_per_m, Unit::hartree, Unit::amu};

bool convertible(Unit a, Unit b) {
  try {
    convert({1.0, a}, b, Equivalence::spectroscopic);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

TEST_CASE("codata anchor values") {
  CHECK(convert({1.0, Unit::hartree}, Unit::eV).value ==
        doctest::Approx(27.211386).epsilon(1e-8));
  CHECK(convert({10.2, Unit::kelvin}, Unit::eV, Equivalence::thermal).value ==
        doctest::Approx(8.789680e-4).epsilon(1e-6));
  CHECK(convert({1.0, Unit::THz}, Unit::kelvin, Equivalence::spectroscopic).value ==
        doctest::Approx(47.99243).epsilon(1e-6));
  CHECK(convert({1.0, Unit::bohr}, Unit::angstrom).value ==
        doctest::Approx(0.529177210903).epsilon(1e-12));
}

TEST_CASE("published He transition is self-consistent to rounding") {
  const double K = convert({0.124, Unit::THz}, Unit::kelvin,
                           Equivalence::spectroscopic).value;
  CHECK(std::abs(K - 5.9) / 5.9 < 0.02);
}

TEST_CASE("identity conversion is exact") {
  for (Unit u : kAllUnits) {
    const double v = 0.1234567890123;
    CHECK(convert({v, u}, u).value == v);
  }
}

TEST_CASE("round trips reproduce the value to 1e-12") {
  for (Unit a : kAllUnits) {
    for (Unit b : kAllUnits) {
      if (!convertible(a, b)) continue;
      const double v = 3.7e-3;
      const auto there = convert({v, a}, b, Equivalence::spectroscopic);
      const auto back = convert(there, a, Equivalence::spectroscopic);
      INFO(name(a), " -> ", name(b));
      CHECK(back.value == doctest::Approx(v).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy-like conversions compose") {
  constexpr std::array energy = {Unit::eV, Unit::meV, Unit::kelvin, Unit::THz,
                                 Unit::GHz, Unit::MHz, Unit::hartree};
  const auto eq = Equivalence::spectroscopic;
  for (Unit a : energy) {
    for (Unit b : energy) {
      for (Unit c : energy) {
        const double direct = convert({1.0, a}, c, eq).value;
        const double via = convert(convert({1.0, a}, b, eq), c, eq).value;
        CHECK(via == doctest::Approx(direct).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("equivalences must be requested") {
  CHECK_THROWS_AS(convert({1.0, Unit::kelvin}, Unit::eV), std::invalid_argument);
  CHECK_THROWS_AS(convert({1.0, Unit::THz}, Unit::eV, Equivalence::thermal),
                  std::invalid_argument);
  CHECK_NOTHROW(convert({1.0, Unit::THz}, Unit::eV, Equivalence::photon));
}

TEST_CASE("incompatible dimensions name both units") {
  try {
    convert({1.0, Unit::nm}, Unit::tesla, Equivalence::spectroscopic);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find(std::string(name(Unit::nm))) != std::string::npos);
    CHECK(what.find(std::string(name(Unit::tesla))) != std::string::npos);
  }
}

TEST_CASE("atomic-unit factors") {
  CHECK(qls::au::e_squared == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(qls::au::per_angstrom * 0.529177210903 == doctest::Approx(1.0));
  CHECK(qls::au::per_eV * 27.211386245988 == doctest::Approx(1.0));
}
