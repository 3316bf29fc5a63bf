#pragma once

// Whole-table pipelines over a registry: de Boer parameters for every
// species and surface-state rows for every surface.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlsurf/matter.hpp"
#include "qlsurf/zstates.hpp"

namespace qls::tables {

struct DeBoerRow {
  std::string name;
  double mass_amu;
  double sigma_angstrom;
  double epsilon_kelvin;
  double lambda;
};

std::vector<DeBoerRow> de_boer_table(const matter::SubstanceRegistry& registry);

struct SurfaceStateRow {
  std::string name;
  double b_angstrom;
  double V0_eV;
  double eps_r;
  double E_z1_meV;
  double E_z2_meV;
  double dE_K;
  double f_THz;
  double z1_nm;
  double z2_nm;
  std::optional<matter::ReferenceRow> reference;
  std::optional<zstates::ConvergenceReport> convergence;

  // (computed - published) / |published| for the six columns above, in the
  // order E_z1, E_z2, dE, f, <z>_1, <z>_2.
  std::optional<std::array<double, 6>> residuals() const;
};

SurfaceStateRow surface_states(const matter::SubstanceSurface& surface,
                               std::optional<double> b_angstrom = std::nullopt,
                               std::optional<double> V0_eV = std::nullopt);

}  // namespace qls::tables
