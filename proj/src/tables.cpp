#include "qlsurf/tables.hpp"

#include <cmath>

#include "qlsurf/errors.hpp"

namespace qls::tables {

std::vector<DeBoerRow> de_boer_table(const matter::SubstanceRegistry& registry) {
  std::vector<DeBoerRow> rows;
  for (const auto& s : registry.species()) {
    rows.push_back({s.name, s.mass_amu, s.sigma_angstrom, s.epsilon_kelvin,
                    matter::de_boer(s)});
  }
  return rows;
}

std::optional<std::array<double, 6>> SurfaceStateRow::residuals() const {
  if (!reference) return std::nullopt;
  const auto& r = *reference;
  auto rel = [](double got, double ref) { return (got - ref) / std::abs(ref); };
  return std::array<double, 6>{rel(E_z1_meV, r.E_z1_meV), rel(E_z2_meV, r.E_z2_meV),
                               rel(dE_K, r.dE_K),         rel(f_THz, r.f_THz),
                               rel(z1_nm, r.z1_nm),       rel(z2_nm, r.z2_nm)};
}

SurfaceStateRow surface_states(const matter::SubstanceSurface& surface,
                               std::optional<double> b_angstrom,
                               std::optional<double> V0_eV) {
  const auto spec = zstates::surface_spec(surface, b_angstrom, V0_eV);
  const auto profile = zstates::build_potential(spec, zstates::default_grid(spec));
  const auto set = zstates::solve_bound_states(profile, 2);
  if (set.states.size() < 2) {
    throw NumericalError("surface '" + surface.name +
                         "' has fewer than two bound states on the default grid");
  }
  const auto tr = zstates::transition(set.states, 1, 2);
  const auto& rs = std::get<zstates::RegularizedImage>(spec.shape);
  return {surface.name,
          rs.b_angstrom,
          rs.V0_eV,
          rs.eps_r,
          set.states[0].energy_meV,
          set.states[1].energy_meV,
          tr.dE_K,
          tr.f_THz,
          set.states[0].mean_z_nm,
          set.states[1].mean_z_nm,
          surface.reference,
          set.convergence};
}

}  // namespace qls::tables
