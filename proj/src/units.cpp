#include "qlsurf/units.hpp"

#include <stdexcept>
#include <string>

namespace qls::units {
namespace {

enum class Dimension {
  energy,
  temperature,
  frequency,
  length,
  areal_density,
  volume_density,
  magnetic_field,
  field_gradient,
  mass,
};

struct UnitInfo {
  Dimension dimension;
  double to_base;  // multiply to get SI base (J, K, Hz, m, m^-2, m^-3, T, T/m, kg)
  std::string_view label;
};

UnitInfo info(Unit u) {
  using codata::elementary_charge;
  switch (u) {
    case Unit::eV: return {Dimension::energy, elementary_charge, "eV"};
    case Unit::meV: return {Dimension::energy, 1e-3 * elementary_charge, "meV"};
    case Unit::hartree: return {Dimension::energy, codata::hartree, "Hartree"};
    case Unit::kelvin: return {Dimension::temperature, 1.0, "K"};
    case Unit::THz: return {Dimension::frequency, 1e12, "THz"};
    case Unit::GHz: return {Dimension::frequency, 1e9, "GHz"};
    case Unit::MHz: return {Dimension::frequency, 1e6, "MHz"};
    case Unit::angstrom: return {Dimension::length, 1e-10, "Angstrom"};
    case Unit::nm: return {Dimension::length, 1e-9, "nm"};
    case Unit::bohr: return {Dimension::length, codata::bohr_radius, "a_B"};
    case Unit::per_cm2: return {Dimension::areal_density, 1e4, "cm^-2"};
    case Unit::per_angstrom3: return {Dimension::volume_density, 1e30, "Angstrom^-3"};
    case Unit::tesla: return {Dimension::magnetic_field, 1.0, "T"};
    case Unit::tesla_per_m: return {Dimension::field_gradient, 1.0, "T/m"};
    case Unit::amu: return {Dimension::mass, codata::atomic_mass_unit, "amu"};
  }
  throw std::invalid_argument("unknown unit tag");
}

bool energy_like(Dimension d) {
  return d == Dimension::energy || d == Dimension::temperature ||
         d == Dimension::frequency;
}

// Joules per base unit of an energy-like dimension, or 0 if `eq` does not
// admit the mapping.
double joules_per_base(Dimension d, Equivalence eq) {
  switch (d) {
    case Dimension::energy: return 1.0;
    case Dimension::temperature:
      return allows(eq, Equivalence::thermal) ? codata::boltzmann : 0.0;
    case Dimension::frequency:
      return allows(eq, Equivalence::photon) ? codata::planck : 0.0;
    default: return 0.0;
  }
}

}  // namespace

std::string_view name(Unit u) { return info(u).label; }

Quantity convert(Quantity q, Unit target, Equivalence eq) {
  if (q.unit == target) return q;
  const UnitInfo from = info(q.unit);
  const UnitInfo to = info(target);
  if (from.dimension == to.dimension) {
    return {q.value * (from.to_base / to.to_base), target};
  }
  if (energy_like(from.dimension) && energy_like(to.dimension)) {
    const double jf = joules_per_base(from.dimension, eq);
    const double jt = joules_per_base(to.dimension, eq);
    if (jf > 0.0 && jt > 0.0) {
      return {q.value * ((from.to_base * jf) / (to.to_base * jt)), target};
    }
  }
  throw std::invalid_argument("cannot convert " + std::string(from.label) +
                              " to " + std::string(to.label) +
                              ": incompatible dimensions" +
                              (energy_like(from.dimension) &&
                                       energy_like(to.dimension)
                                   ? " (request a thermal/photon equivalence)"
                                   : ""));
}

}  // namespace qls::units
