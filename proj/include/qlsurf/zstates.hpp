#pragma once

// Vertical (z) bound states of an electron above a dielectric surface.
//
// Lengths at the interface are in Angstrom, potentials in eV, state energies
// in meV and mean heights in nm. The solver itself works in hartree/bohr.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qls::matter {
struct SubstanceSurface;
}

namespace qls::zstates {

// V0 barrier for z<0, -[(eps-1)/(eps+1)] e^2 / 4(z+b) for z>=0.
struct RegularizedImage {
  double V0_eV;
  double eps_r;
  double b_angstrom;
};

// Hard wall at z=0, -[(eps-1)/(eps+1)] e^2 / 4z for z>0.
struct InfiniteBarrierImage {
  double eps_r;
};

// Substrate barrier below, image attraction of the substrate plus a
// tanh^2 rise to the upper medium's barrier above.
struct Interface {
  double V_below_eV;
  double V_above_eV;
  double eps_r_below;
  double zeta_angstrom;
};

using PotentialShape =
    std::variant<RegularizedImage, InfiniteBarrierImage, Interface>;

struct PotentialSpec {
  PotentialShape shape;
  double pressing_field_V_per_m = 0.0;  // adds e E z for z>0
};

void validate(const PotentialSpec& spec);

struct GridSpec {
  double z_min_angstrom;
  double z_max_angstrom;
  std::size_t points;

  double spacing() const {
    return (z_max_angstrom - z_min_angstrom) / static_cast<double>(points - 1);
  }
  double z(std::size_t i) const {
    return z_min_angstrom + spacing() * static_cast<double>(i);
  }
  // Same end points, half the spacing; every node of *this is kept.
  GridSpec refined() const { return {z_min_angstrom, z_max_angstrom, 2 * points - 1}; }
};

void validate(const GridSpec& grid);

struct PotentialProfile {
  GridSpec grid;
  std::vector<double> samples_eV;  // +inf marks hard-wall nodes
  double asymptote_eV;             // bound states lie below this
  std::optional<PotentialSpec> spec;
  std::optional<std::string> convergence_warning;
};

struct BoundState {
  int level;  // 1-based
  double energy_meV;
  GridSpec grid;
  std::vector<double> wavefunction;  // nm^-1/2, sum psi^2 h_nm = 1
  int node_count;
  double mean_z_nm;
};

struct ConvergenceReport {
  std::size_t refined_points;
  std::vector<double> energy_change_meV;  // E(h/2) - E(h) per state
};

struct BoundStateSet {
  std::vector<BoundState> states;
  std::size_t requested = 0;
  std::optional<ConvergenceReport> convergence;

  bool shortfall() const { return states.size() < requested; }
};

struct Transition {
  double dE_K;
  double f_THz;
};

struct StarkPoint {
  double field_V_per_m;
  std::optional<double> ground_energy_meV;  // empty: no bound state
};

// Exact potential value at z (not a grid sample). The Interface and
// infinite-barrier variants return -inf at the z=0 pole.
double potential_at(const PotentialSpec& spec, double z_angstrom);

// Image-charge strength Z = (eps-1)/(4(eps+1)).
double image_charge(double eps_r);

// Default domain: z_min = -20 A with z=0 on a node; image variants run to
// 20x the hydrogenic <z>_1 with h <= (a_B/Z)/200.
GridSpec default_grid(const PotentialSpec& spec);

PotentialProfile build_potential(const PotentialSpec& spec, const GridSpec& grid);

struct SolveOptions {
  bool convergence_report = true;
};

BoundStateSet solve_bound_states(const PotentialProfile& profile, int count,
                                 const SolveOptions& options = {});

std::vector<double> hydrogenic_levels(double eps_r, int n_max);

double mean_z(const BoundState& state);

// Levels are 1-based, lower < upper.
Transition transition(std::span<const BoundState> states, int lower, int upper);

std::vector<StarkPoint> stark_scan(const PotentialSpec& spec,
                                   std::span<const double> fields_V_per_m,
                                   std::optional<GridSpec> grid = std::nullopt);

// Regularized-image spec for a surface, with b defaulting to a_s and V0 to
// the tabulated barrier.
PotentialSpec surface_spec(const matter::SubstanceSurface& surface,
                           std::optional<double> b_angstrom = std::nullopt,
                           std::optional<double> V0_eV = std::nullopt);

// Writes "psi_<level>.dat" for each state: a '#' header line, then z (nm)
// and psi (nm^-1/2) columns. Returns the written paths.
std::vector<std::filesystem::path> dump_wavefunctions(
    std::span<const BoundState> states, const std::filesystem::path& dir);

}  // namespace qls::zstates
