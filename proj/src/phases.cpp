#include "qlsurf/phases.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "qlsurf/errors.hpp"
#include "qlsurf/units.hpp"

namespace qls::phases {
namespace {

// Everything below works in hartree atomic units: n in bohr^-2, T and
// energies in hartree.
constexpr double kE2 = au::e_squared;
constexpr double kPi = au::pi;
constexpr double kRelTol = 1e-8;

double density_au(double n_cm2) { return n_cm2 / (au::per_cm * au::per_cm); }
double density_cm2(double n_au) { return n_au * au::per_cm * au::per_cm; }
double temperature_au(double T_K) { return T_K * au::per_kelvin; }
double to_eV(double e_au) { return e_au / au::per_eV; }

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be > 0");
  }
}

// mu / k_B T as a function of t = E_F / k_B T.
double reduced_mu(double t) {
  if (t > 30.0) return t + std::log1p(-std::exp(-t));
  return std::log(std::expm1(t));
}

// Complete Fermi-Dirac integral of order 1 over x = eps / k_B T:
// F(eta) = int_0^inf x / (exp(x - eta) + 1) dx. For eta < 0 the Boltzmann
// factor e^eta is divided out so the classical limit stays representable.
double fermi_integral_1(double eta, bool scaled) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  constexpr double kWindow = 40.0;  // e^-40 ~ 4e-18 beyond the Fermi edge

  double total = 0.0;
  double error = 0.0;
  auto piece = [&](auto&& f, double a, double b) {
    double err = 0.0;
    total += GK::integrate(f, a, b, 15, 1e-12, &err);
    error += err;
  };

  if (scaled) {
    // x e^-x / (1 + e^(eta - x))
    auto f = [eta](double x) { return x * std::exp(-x) / (1.0 + std::exp(eta - x)); };
    piece(f, 0.0, kWindow);
    total += std::exp(-kWindow) * (kWindow + 1.0);
  } else {
    auto f = [eta](double x) {
      const double y = x - eta;
      if (y > 0) {
        const double e = std::exp(-y);
        return x * e / (1.0 + e);
      }
      return x / (1.0 + std::exp(y));
    };
    if (eta > 0) piece(f, 0.0, eta);
    const double start = std::max(eta, 0.0);
    piece(f, start, start + kWindow);
    const double c = start + kWindow;
    total += std::exp(eta - c) * (c + 1.0);
  }
  if (!(error <= kRelTol * std::abs(total))) {
    throw NumericalError("Fermi-Dirac quadrature: requested relative error " +
                         std::to_string(kRelTol) + ", achieved " +
                         std::to_string(error / std::abs(total)));
  }
  return total;
}

double kinetic_au(double n, double T) {
  const double EF = kPi * n;
  const double t = EF / T;
  const double eta = reduced_mu(t);
  if (eta < 0) {
    // K = (T^2 / E_F) e^eta G(eta), with e^eta = expm1(t)
    return T * (std::expm1(t) / t) * fermi_integral_1(eta, true);
  }
  return T / t * fermi_integral_1(eta, false);
}

double gamma_au(double n, double T) { return kE2 * std::sqrt(kPi * n) / kinetic_au(n, T); }

double n_star_au(double gamma0) { return 4.0 * kE2 * kE2 / (kPi * gamma0 * gamma0); }

// Maximum of Gamma(., T) over ln n in [lo, hi]: {ln n at max, Gamma max}.
std::pair<double, double> gamma_peak(double T, double lo, double hi) {
  auto neg = [T](double x) { return -gamma_au(std::exp(x), T); };
  const auto r = boost::math::tools::brent_find_minima(
      neg, lo, hi, std::numeric_limits<double>::digits / 2);
  return {r.first, -r.second};
}

struct DensityWindow {
  double lo;  // ln n
  double hi;
};

// Brackets for the roots at temperature T: classical root / 10 and n* x 10.
std::optional<DensityWindow> root_window(double gamma0, double T) {
  // Gamma <= e^2 sqrt(2 / T) for every n, so hotter gases never freeze.
  if (kE2 * std::sqrt(2.0 / T) < gamma0) return std::nullopt;
  const double x = gamma0 * T / kE2;
  const double n_classical = x * x / kPi;
  return DensityWindow{std::log(n_classical / 10.0),
                       std::log(10.0 * n_star_au(gamma0))};
}

double bisect_log_density(double gamma0, double T, double a, double b) {
  auto f = [&](double x) { return gamma_au(std::exp(x), T) - gamma0; };
  auto tol = [](double l, double r) { return std::abs(r - l) <= 1e-12; };
  const auto r = boost::math::tools::bisect(f, a, b, tol);
  return std::exp(0.5 * (r.first + r.second));
}

}  // namespace

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::classical_coulomb_gas: return "classical Coulomb gas";
    case PhaseLabel::classical_coulomb_liquid: return "classical Coulomb liquid";
    case PhaseLabel::classical_wigner_solid: return "classical Wigner solid";
    case PhaseLabel::quantum_fermi_gas: return "quantum Fermi gas";
    case PhaseLabel::quantum_fermi_liquid: return "quantum Fermi liquid";
    case PhaseLabel::quantum_wigner_solid: return "quantum Wigner solid";
  }
  return "unknown";
}

double fermi_energy(double density_cm2) {
  if (!(density_cm2 >= 0)) throw std::invalid_argument("density must be >= 0");
  return to_eV(kPi * density_au(density_cm2));
}

double chemical_potential(double density_cm2, double temperature_K) {
  require_positive(density_cm2, "density");
  require_positive(temperature_K, "temperature");
  const double T = temperature_au(temperature_K);
  return to_eV(T * reduced_mu(kPi * density_au(density_cm2) / T));
}

double kinetic_energy(double density_cm2, double temperature_K) {
  require_positive(density_cm2, "density");
  require_positive(temperature_K, "temperature");
  return to_eV(kinetic_au(density_au(density_cm2), temperature_au(temperature_K)));
}

double coulomb_energy(double density_cm2) {
  if (!(density_cm2 >= 0)) throw std::invalid_argument("density must be >= 0");
  return to_eV(kE2 * std::sqrt(kPi * density_au(density_cm2)));
}

double plasma_parameter(double density_cm2, double temperature_K) {
  require_positive(density_cm2, "density");
  require_positive(temperature_K, "temperature");
  return gamma_au(density_au(density_cm2), temperature_au(temperature_K));
}

ElectronGasPoint evaluate(double density_cm2, double temperature_K) {
  const double K = kinetic_energy(density_cm2, temperature_K);
  const double U = coulomb_energy(density_cm2);
  return {density_cm2,
          temperature_K,
          fermi_energy(density_cm2),
          chemical_potential(density_cm2, temperature_K),
          K,
          U,
          U / K};
}

PhaseLabel classify(double density_cm2, double temperature_K, double gamma0) {
  require_positive(gamma0, "gamma0");
  const double n = density_au(density_cm2);
  const double T = temperature_au(temperature_K);
  const double g = plasma_parameter(density_cm2, temperature_K);
  const bool quantum = kPi * n >= T;
  if (g >= gamma0) {
    return quantum ? PhaseLabel::quantum_wigner_solid
                   : PhaseLabel::classical_wigner_solid;
  }
  if (g <= 1.0) {
    return quantum ? PhaseLabel::quantum_fermi_gas : PhaseLabel::classical_coulomb_gas;
  }
  return quantum ? PhaseLabel::quantum_fermi_liquid
                 : PhaseLabel::classical_coulomb_liquid;
}

double quantum_critical_density(double gamma0) {
  require_positive(gamma0, "gamma0");
  return density_cm2(n_star_au(gamma0));
}

CriticalPoint critical_point(double gamma0) {
  require_positive(gamma0, "gamma0");
  // Above this bound even the peak of Gamma is below gamma0.
  const double t_hi = 2.0 * kE2 * kE2 / (gamma0 * gamma0);

  auto excess = [&](double log_T) {
    const double T = std::exp(log_T);
    const auto w = root_window(gamma0, T);
    if (!w) return -gamma0;
    return gamma_peak(T, w->lo, w->hi).second - gamma0;
  };

  double lo = std::log(t_hi) - std::log(10.0);
  for (int i = 0; excess(lo) <= 0; ++i) {
    if (i == 8) throw NumericalError("critical_point: no solid phase found");
    lo -= std::log(10.0);
  }
  const double hi = std::log(t_hi);
  auto tol = [](double l, double r) { return std::abs(r - l) <= 1e-9; };
  const auto r = boost::math::tools::bisect(excess, lo, hi, tol);
  // lower end still has a solution; report its apex
  const double T = std::exp(r.first);
  const auto w = root_window(gamma0, T);
  const double n = std::exp(gamma_peak(T, w->lo, w->hi).first);
  return {T / au::per_kelvin, density_cm2(n)};
}

MeltingCurve melting_curve(double gamma0, std::span<const double> temperatures_K) {
  require_positive(gamma0, "gamma0");
  for (std::size_t i = 0; i < temperatures_K.size(); ++i) {
    require_positive(temperatures_K[i], "temperature");
    if (i > 0 && !(temperatures_K[i] > temperatures_K[i - 1])) {
      throw std::invalid_argument("temperatures must be strictly ascending");
    }
  }

  MeltingCurve out{gamma0, {}, critical_point(gamma0),
                   quantum_critical_density(gamma0)};
  for (double T_K : temperatures_K) {
    MeltingEntry e{T_K, std::nullopt, std::nullopt, false};
    const double T = temperature_au(T_K);
    if (const auto w = root_window(gamma0, T)) {
      const auto [x_peak, g_peak] = gamma_peak(T, w->lo, w->hi);
      if (g_peak >= gamma0) {
        const bool low_ok = gamma_au(std::exp(w->lo), T) < gamma0;
        const bool high_ok = gamma_au(std::exp(w->hi), T) < gamma0;
        if (low_ok && high_ok) {
          e.n_c1_cm2 = density_cm2(bisect_log_density(gamma0, T, w->lo, x_peak));
          e.n_c2_cm2 = density_cm2(bisect_log_density(gamma0, T, x_peak, w->hi));
        } else {
          e.bracket_failure = true;
        }
      }
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace qls::phases
