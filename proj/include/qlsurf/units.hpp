#pragma once

// Physical constants (CODATA 2018) and unit conversions.
//
// The numerical modules work in Hartree atomic units (hbar = m_e = e = 1,
// lengths in bohr, energies in hartree) and convert at their boundaries with
// the factors in namespace `qls::au`.

#include <numbers>
#include <string_view>

namespace qls::units {

namespace codata {
inline constexpr double planck = 6.62607015e-34;          // J s (exact)
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double boltzmann = 1.380649e-23;         // J/K (exact)
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T
inline constexpr double bohr_radius = 0.529177210903e-10;  // m
inline constexpr double hartree = 4.3597447222071e-18;     // J
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double boltzmann_eV = boltzmann / elementary_charge;  // eV/K
inline constexpr double planck_eV = planck / elementary_charge;        // eV s
inline constexpr double hartree_eV = hartree / elementary_charge;
inline constexpr double bohr_angstrom = bohr_radius * 1e10;

// e^2 in mixed units (Gaussian e^2, i.e. e^2/4 pi eps0 in SI).
inline constexpr double coulomb_eV_angstrom = 14.39964;
}  // namespace codata

enum class Unit {
  eV,
  meV,
  kelvin,
  THz,
  GHz,
  MHz,
  angstrom,
  nm,
  bohr,
  per_cm2,
  per_angstrom3,
  tesla,
  tesla_per_m,
  hartree,
  amu,
};

// Cross-dimension conversions must be requested explicitly: `thermal` maps
// temperature to energy through k_B, `photon` maps frequency to energy
// through h.
enum class Equivalence : unsigned {
  none = 0,
  thermal = 1,
  photon = 2,
  spectroscopic = 3,
};

constexpr Equivalence operator|(Equivalence a, Equivalence b) {
  return static_cast<Equivalence>(static_cast<unsigned>(a) |
                                  static_cast<unsigned>(b));
}

constexpr bool allows(Equivalence set, Equivalence flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

struct Quantity {
  double value;
  Unit unit;
};

std::string_view name(Unit u);

// Linear rescaling by CODATA factors. Throws std::invalid_argument naming
// both units when the dimensions are incompatible under `eq`.
Quantity convert(Quantity q, Unit target,
                 Equivalence eq = Equivalence::none);

}  // namespace qls::units

namespace qls::au {

namespace c = units::codata;

// Multiply a value in the named unit by these to get atomic units.
inline constexpr double per_eV = 1.0 / c::hartree_eV;
inline constexpr double per_meV = 1e-3 / c::hartree_eV;
inline constexpr double per_kelvin = c::boltzmann_eV / c::hartree_eV;
inline constexpr double per_angstrom = 1.0 / c::bohr_angstrom;
inline constexpr double per_nm = 10.0 / c::bohr_angstrom;
inline constexpr double per_cm = 1e8 / c::bohr_angstrom;

// e^2 in hartree*bohr, derived from the fixed mixed-unit value.
inline constexpr double e_squared =
    c::coulomb_eV_angstrom / (c::hartree_eV * c::bohr_angstrom);

inline constexpr double pi = std::numbers::pi;

}  // namespace qls::au
