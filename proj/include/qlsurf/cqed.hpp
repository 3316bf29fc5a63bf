#pragma once

// Circuit-QED design estimators for a trapped surface electron.
//
// Frequencies are ordinary (Hz-family) at the interface; the spin-coupling
// formula converts to angular frequency internally (omega = 2 pi f).

namespace qls::cqed {

struct SpinCouplingInput {
  double g_charge_MHz;       // charge-photon coupling
  double omega_x_GHz;        // charge (trap) frequency
  double omega_L_GHz;        // Larmor frequency
  double grad_Bz_T_per_m;    // in-plane gradient of the out-of-plane field
  double mass_ratio = 1.0;   // effective mass / m_e
};

// |g_s| = mu_B a_x (dBz/dx) g sqrt(2) / (hbar w_x |1 - w_L^2 / w_x^2|),
// a_x = sqrt(hbar / m w_x), g_e = 2. Result in MHz (units of g).
// Throws std::domain_error at the w_L = w_x pole.
double spin_coupling(const SpinCouplingInput& input);

// Parallel-plate image-charge change dz / D as a fraction of e. Both
// lengths in the same unit.
double image_charge_delta(double dz_nm, double distance_nm);

// Electron Larmor frequency 2 mu_B B / h, in GHz.
double larmor(double field_T);

struct CouplingBudget {
  double g_MHz;
  double kappa_MHz;
  double gamma_MHz;
};

struct StrongCouplingVerdict {
  bool strong;
  double margin_MHz;  // g - max(kappa, gamma)
};

StrongCouplingVerdict strong_coupling(const CouplingBudget& budget);

}  // namespace qls::cqed
