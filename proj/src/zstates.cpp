#include "qlsurf/zstates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "qlsurf/errors.hpp"
#include "qlsurf/matter.hpp"
#include "qlsurf/tridiag.hpp"
#include "qlsurf/units.hpp"

namespace qls::zstates {
namespace {

int count_nodes(const std::vector<double>& psi) {
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  const double floor = 1e-8 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : psi) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

// Lowest `count` eigenpairs below the asymptote. Energies in hartree.
struct RawSolution {
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors;  // full grid, unit 2-norm
};

RawSolution solve_raw(const PotentialProfile& profile, int count) {
  const GridSpec& g = profile.grid;
  const std::size_t n = g.points;
  const double h = g.spacing() * au::per_angstrom;

  // Active interior: Dirichlet at both ends and after any leading hard wall.
  std::size_t first = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isinf(profile.samples_eV[i]) && profile.samples_eV[i] > 0) {
      first = i + 1;
    }
  }
  const std::size_t last = n - 2;
  if (first > last) {
    throw std::invalid_argument("potential profile has no interior nodes");
  }
  for (std::size_t i = first; i <= last; ++i) {
    if (!std::isfinite(profile.samples_eV[i])) {
      throw std::invalid_argument("potential sample at node " +
                                  std::to_string(i) + " is not finite");
    }
  }

  tridiag::SymmetricTridiagonal t;
  const std::size_t m = last - first + 1;
  t.diagonal.resize(m);
  t.off_diagonal.assign(m - 1, -0.5 / (h * h));
  for (std::size_t i = 0; i < m; ++i) {
    t.diagonal[i] = 1.0 / (h * h) + profile.samples_eV[first + i] * au::per_eV;
  }

  auto [lo, hi] = tridiag::gershgorin_bounds(t);
  lo -= 1e-12 * std::max(std::abs(lo), 1.0);
  hi += 1e-12 * std::max(std::abs(hi), 1.0);
  const double top = profile.asymptote_eV * au::per_eV;
  std::size_t available = m;
  double upper = hi;
  if (top < hi) {
    available = top < lo ? 0 : tridiag::count_below(t, top);
    upper = top;
  }
  const std::size_t found = std::min<std::size_t>(available, count);

  RawSolution out;
  for (std::size_t k = 0; k < found; ++k) {
    const double lambda = tridiag::eigenvalue(t, k, lo, upper);
    // orthogonalise only against close-lying earlier states
    std::vector<std::vector<double>> near;
    const double gap_scale = 1e-3 * std::max(std::abs(lo), std::abs(hi));
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(out.energies[j] - lambda) < gap_scale) {
        near.emplace_back(out.vectors[j].begin() + first,
                          out.vectors[j].begin() + first + m);
      }
    }
    std::vector<double> v;
    try {
      v = tridiag::eigenvector(t, lambda, near);
    } catch (const NumericalError& e) {
      throw NumericalError("bound state " + std::to_string(k + 1) + ": " +
                           e.what());
    }
    std::vector<double> full(n, 0.0);
    std::copy(v.begin(), v.end(), full.begin() + first);
    out.energies.push_back(lambda);
    out.vectors.push_back(std::move(full));
  }
  return out;
}

}  // namespace

double mean_z(const BoundState& state) {
  const double h_nm = state.grid.spacing() / 10.0;
  double s = 0.0;
  for (std::size_t i = 0; i < state.wavefunction.size(); ++i) {
    const double psi = state.wavefunction[i];
    s += state.grid.z(i) / 10.0 * psi * psi;
  }
  return s * h_nm;
}

BoundStateSet solve_bound_states(const PotentialProfile& profile, int count,
                                 const SolveOptions& options) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  validate(profile.grid);
  if (profile.samples_eV.size() != profile.grid.points) {
    throw std::invalid_argument("profile samples do not match the grid");
  }

  const RawSolution raw = solve_raw(profile, count);
  BoundStateSet out;
  out.requested = static_cast<std::size_t>(count);
  const double h_nm = profile.grid.spacing() / 10.0;

  for (std::size_t k = 0; k < raw.energies.size(); ++k) {
    BoundState s;
    s.level = static_cast<int>(k + 1);
    s.energy_meV = raw.energies[k] / au::per_meV;
    s.grid = profile.grid;
    s.wavefunction = raw.vectors[k];
    // unit 2-norm -> sum psi^2 h = 1; first significant lobe positive
    const double scale = 1.0 / std::sqrt(h_nm);
    double peak = 0.0;
    for (double v : s.wavefunction) peak = std::max(peak, std::abs(v));
    double sign = 1.0;
    for (double v : s.wavefunction) {
      if (std::abs(v) > 1e-3 * peak) {
        sign = v > 0 ? 1.0 : -1.0;
        break;
      }
    }
    for (double& v : s.wavefunction) v *= sign * scale;
    s.node_count = count_nodes(s.wavefunction);
    if (s.node_count != static_cast<int>(k)) {
      throw NumericalError("bound state " + std::to_string(k + 1) + " has " +
                           std::to_string(s.node_count) + " nodes, expected " +
                           std::to_string(k));
    }
    s.mean_z_nm = mean_z(s);
    out.states.push_back(std::move(s));
  }
  for (std::size_t k = 1; k < out.states.size(); ++k) {
    if (!(out.states[k].energy_meV > out.states[k - 1].energy_meV)) {
      throw NumericalError("bound state energies are not strictly ascending at " +
                           std::to_string(k + 1));
    }
  }

  if (options.convergence_report && profile.spec && !out.states.empty()) {
    const PotentialProfile fine =
        build_potential(*profile.spec, profile.grid.refined());
    const RawSolution r2 = solve_raw(fine, count);
    ConvergenceReport rep{fine.grid.points, {}};
    const std::size_t both = std::min(r2.energies.size(), out.states.size());
    for (std::size_t k = 0; k < both; ++k) {
      rep.energy_change_meV.push_back(r2.energies[k] / au::per_meV -
                                      out.states[k].energy_meV);
    }
    out.convergence = std::move(rep);
  }
  return out;
}

std::vector<double> hydrogenic_levels(double eps_r, int n_max) {
  if (!(eps_r >= 1)) throw std::invalid_argument("eps_r must be >= 1");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const double Z = image_charge(eps_r) * au::e_squared;
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(-Z * Z / (2.0 * n * n) / au::per_meV);
  }
  return out;
}

Transition transition(std::span<const BoundState> states, int lower, int upper) {
  if (lower >= upper) {
    throw std::invalid_argument("transition requires lower level < upper level");
  }
  if (lower < 1 || static_cast<std::size_t>(upper) > states.size()) {
    throw std::invalid_argument("transition level out of range");
  }
  const double dE_eV =
      (states[upper - 1].energy_meV - states[lower - 1].energy_meV) * 1e-3;
  return {dE_eV / units::codata::boltzmann_eV,
          dE_eV / units::codata::planck_eV * 1e-12};
}

std::vector<StarkPoint> stark_scan(const PotentialSpec& spec,
                                   std::span<const double> fields_V_per_m,
                                   std::optional<GridSpec> grid) {
  std::vector<StarkPoint> out;
  for (double field : fields_V_per_m) {
    if (!std::isfinite(field)) throw std::invalid_argument("field must be finite");
    PotentialSpec s = spec;
    s.pressing_field_V_per_m = field;
    const GridSpec g = grid ? *grid : default_grid(spec);
    const auto set = solve_bound_states(build_potential(s, g), 1,
                                        SolveOptions{.convergence_report = false});
    StarkPoint p{field, std::nullopt};
    if (!set.states.empty()) p.ground_energy_meV = set.states.front().energy_meV;
    out.push_back(p);
  }
  return out;
}

PotentialSpec surface_spec(const matter::SubstanceSurface& surface,
                           std::optional<double> b_angstrom,
                           std::optional<double> V0_eV) {
  return PotentialSpec{
      RegularizedImage{V0_eV.value_or(surface.barrier_V0_eV),
                       surface.dielectric_constant,
                       b_angstrom.value_or(surface.scattering_length_angstrom)},
      0.0};
}

std::vector<std::filesystem::path> dump_wavefunctions(
    std::span<const BoundState> states, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::vector<std::filesystem::path> written;
  char buf[96];
  for (const auto& s : states) {
    const auto path = dir / ("psi_" + std::to_string(s.level) + ".dat");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write wavefunction file '" +
                               path.string() + "'");
    }
    std::snprintf(buf, sizeof buf, "%.6e", s.energy_meV);
    out << "# z_nm psi_nm^-1/2 level=" << s.level << " energy_meV=" << buf
        << "\n";
    for (std::size_t i = 0; i < s.wavefunction.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.6e %.6e\n", s.grid.z(i) / 10.0,
                    s.wavefunction[i]);
      out << buf;
    }
    if (!out) {
      throw std::runtime_error("failed writing '" + path.string() + "'");
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace qls::zstates
