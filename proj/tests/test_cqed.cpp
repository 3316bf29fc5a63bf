#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qlsurf/cqed.hpp"

using namespace qls::cqed;

namespace {
// 8 mG/nm in T/m
constexpr double kDeviceGradient = 8e-7 / 1e-9;
const SpinCouplingInput kDevice{20.0, 6.0, 6.03, kDeviceGradient};
}  // namespace

TEST_CASE("spin coupling for the reference device") {
  const double gs = spin_coupling(kDevice);
  CHECK(gs >= 0.25);
  CHECK(gs <= 1.0);
  // angular convention, computed independently:
  // mu_B sqrt(hbar/(m 2pi 6e9)) 800 * 20 sqrt2 / (h 6e9 |1-(6.03/6)^2|)
  CHECK(gs == doctest::Approx(0.2909).epsilon(2e-3));
}

TEST_CASE("spin coupling scaling") {
  SpinCouplingInput in = kDevice;
  in.grad_Bz_T_per_m = 0;
  CHECK(spin_coupling(in) == 0.0);
  in = kDevice;
  in.grad_Bz_T_per_m *= 2;
  CHECK(spin_coupling(in) == doctest::Approx(2 * spin_coupling(kDevice)).epsilon(1e-14));
  in = kDevice;
  in.g_charge_MHz *= 3;
  CHECK(spin_coupling(in) == doctest::Approx(3 * spin_coupling(kDevice)).epsilon(1e-14));
  in = kDevice;
  in.mass_ratio = 4;
  CHECK(spin_coupling(in) == doctest::Approx(0.5 * spin_coupling(kDevice)).epsilon(1e-14));
}

TEST_CASE("detuning sign flip keeps the magnitude to first order") {
  SpinCouplingInput below = kDevice;
  below.omega_L_GHz = 6.0 - 0.03;
  const double up = spin_coupling(kDevice);
  const double down = spin_coupling(below);
  CHECK(std::abs(up - down) / up < 0.02);
}

TEST_CASE("resonance pole is rejected") {
  SpinCouplingInput in = kDevice;
  in.omega_L_GHz = in.omega_x_GHz;
  CHECK_THROWS_AS(spin_coupling(in), std::domain_error);
}

TEST_CASE("image charge") {
  CHECK(image_charge_delta(10.0, 2e6) == 5e-6);
  CHECK(image_charge_delta(0.0, 2e6) == 0.0);
  CHECK(image_charge_delta(10.0, 140.0) == doctest::Approx(0.0714).epsilon(1e-3));
  for (double k : {0.5, 3.0, 1e3}) {
    CHECK(image_charge_delta(10.0 * k, 2e6 * k) == doctest::Approx(5e-6).epsilon(1e-15));
  }
  CHECK_THROWS(image_charge_delta(1.0, 0.0));
}

TEST_CASE("Larmor frequency") {
  CHECK(larmor(0.0) == 0.0);
  CHECK(larmor(0.2) == doctest::Approx(5.598).epsilon(1e-3));
  CHECK(larmor(0.6) == doctest::Approx(3 * larmor(0.2)).epsilon(1e-14));
}

TEST_CASE("strong coupling") {
  const auto ok = strong_coupling({3.5, 0.1, 1.7});
  CHECK(ok.strong);
  CHECK(ok.margin_MHz == doctest::Approx(1.8));
  CHECK_FALSE(strong_coupling({5.0, 0.0, 80.0}).strong);
  CHECK_FALSE(strong_coupling({1.7, 0.1, 1.7}).strong);
  CHECK_FALSE(strong_coupling({0.1, 0.1, 0.0}).strong);
  bool seen = false;
  for (double g = 0; g < 5; g += 0.05) {
    const bool s = strong_coupling({g, 0.1, 1.7}).strong;
    if (seen) CHECK(s);
    seen = seen || s;
  }
  CHECK(seen);
}
