#include "qlsurf/cqed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlsurf/units.hpp"

namespace qls::cqed {

namespace c = units::codata;

double spin_coupling(const SpinCouplingInput& in) {
  if (!(in.omega_x_GHz > 0)) throw std::invalid_argument("omega_x must be > 0");
  if (!(in.g_charge_MHz >= 0)) throw std::invalid_argument("g must be >= 0");
  if (!(in.mass_ratio > 0)) throw std::invalid_argument("mass ratio must be > 0");
  const double ratio = in.omega_L_GHz / in.omega_x_GHz;
  const double detuning = 1.0 - ratio * ratio;
  if (detuning == 0.0) {
    throw std::domain_error(
        "spin_coupling: Larmor frequency equals the charge frequency "
        "(resonance pole; the dispersive formula needs detuning)");
  }
  const double omega_x = 2.0 * au::pi * in.omega_x_GHz * 1e9;
  const double a_x =
      std::sqrt(c::hbar / (in.mass_ratio * c::electron_mass * omega_x));
  const double zeeman = c::bohr_magneton * a_x * in.grad_Bz_T_per_m;
  return std::abs(zeeman * in.g_charge_MHz * std::sqrt(2.0) /
                  (c::hbar * omega_x * detuning));
}

double image_charge_delta(double dz_nm, double distance_nm) {
  if (!(distance_nm > 0)) throw std::invalid_argument("D must be > 0");
  if (!(dz_nm >= 0)) throw std::invalid_argument("dz must be >= 0");
  return dz_nm / distance_nm;
}

double larmor(double field_T) {
  if (!(field_T >= 0)) throw std::invalid_argument("B must be >= 0");
  return 2.0 * c::bohr_magneton * field_T / c::planck * 1e-9;
}

StrongCouplingVerdict strong_coupling(const CouplingBudget& b) {
  if (!(b.g_MHz >= 0 && b.kappa_MHz >= 0 && b.gamma_MHz >= 0)) {
    throw std::invalid_argument("coupling budget entries must be >= 0");
  }
  const double loss = std::max(b.kappa_MHz, b.gamma_MHz);
  return {b.g_MHz > b.kappa_MHz && b.g_MHz > b.gamma_MHz, b.g_MHz - loss};
}

}  // namespace qls::cqed
