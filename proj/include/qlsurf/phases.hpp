#pragma once

// Two-dimensional electron phases: Fermi-Dirac kinetics, plasma parameter,
// phase labels and the Wigner-solid melting dome.
//
// Densities are areal (cm^-2), temperatures in K, energies in eV.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qls::phases {

enum class PhaseLabel {
  classical_coulomb_gas,
  classical_coulomb_liquid,
  classical_wigner_solid,
  quantum_fermi_gas,
  quantum_fermi_liquid,
  quantum_wigner_solid,
};

std::string_view to_string(PhaseLabel label);

struct ElectronGasPoint {
  double density_cm2;
  double temperature_K;
  double fermi_energy_eV;
  double chemical_potential_eV;
  double kinetic_energy_eV;
  double coulomb_energy_eV;
  double gamma;
};

// E_F = pi hbar^2 n / m_e (spin-degenerate 2D gas).
double fermi_energy(double density_cm2);

// mu = k_B T ln(exp(E_F / k_B T) - 1), stable for E_F / k_B T up to 1e6+.
double chemical_potential(double density_cm2, double temperature_K);

// Mean kinetic energy per electron of the ideal 2D Fermi gas, by adaptive
// quadrature (relative error <= 1e-8). Throws qls::NumericalError otherwise.
double kinetic_energy(double density_cm2, double temperature_K);

// U_e = e^2 sqrt(pi n).
double coulomb_energy(double density_cm2);

// Gamma = U_e / K_e with the full Fermi-Dirac K_e.
double plasma_parameter(double density_cm2, double temperature_K);

ElectronGasPoint evaluate(double density_cm2, double temperature_K);

// Quantum iff E_F >= k_B T; solid iff Gamma >= gamma0, gas iff Gamma <= 1.
PhaseLabel classify(double density_cm2, double temperature_K, double gamma0);

// n* = 4 e^4 m_e^2 / (pi hbar^4 gamma0^2), the T=0 quantum melting density.
double quantum_critical_density(double gamma0);

struct CriticalPoint {
  double temperature_K;
  double density_cm2;
};

// Apex of the melting dome: the highest T at which Gamma(n, T) = gamma0 has
// a solution, and the density where it does.
CriticalPoint critical_point(double gamma0);

struct MeltingEntry {
  double temperature_K;
  std::optional<double> n_c1_cm2;  // classical (low-density) root
  std::optional<double> n_c2_cm2;  // quantum (high-density) root
  bool bracket_failure = false;
};

struct MeltingCurve {
  double gamma0;
  std::vector<MeltingEntry> entries;
  CriticalPoint critical;
  double n_star_cm2;
};

// Roots of Gamma(n, T) = gamma0 for each T (ascending, positive): either
// two roots or none.
MeltingCurve melting_curve(double gamma0, std::span<const double> temperatures_K);

}  // namespace qls::phases
