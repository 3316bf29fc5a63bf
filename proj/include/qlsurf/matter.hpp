#pragma once

// Particle species and condensed-phase surfaces, plus the registry that
// holds them. Field units are fixed: amu, Angstrom, K, Angstrom^-3, eV.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qls::matter {

struct ParticleSpecies {
  std::string name;
  double mass_amu;
  double sigma_angstrom;
  double epsilon_kelvin;
};

// Published surface-state values for one substance, kept verbatim.
struct ReferenceRow {
  double E_z1_meV;
  double E_z2_meV;
  double dE_K;
  double f_THz;
  double z1_nm;
  double z2_nm;
};

struct SubstanceSurface {
  std::string name;
  double number_density_per_A3;
  double scattering_length_angstrom;
  double dielectric_constant;
  double barrier_V0_eV;
  std::optional<ReferenceRow> reference;
  std::optional<double> density_limit_cm2;
};

// Throw qls::DataError naming the offending field.
void validate(const ParticleSpecies& s);
void validate(const SubstanceSurface& s);

// Lennard-Jones pair potential 4 eps [(sigma/r)^12 - (sigma/r)^6], in K.
double lj_potential(double r_angstrom, const ParticleSpecies& species);

// de Boer parameter h / (sigma sqrt(m eps)), with d ~ sigma and eps_k ~ eps.
double de_boer(const ParticleSpecies& species);

// Weak-scattering Pauli barrier 2 pi hbar^2 n a_s / m_e, in eV.
double v0_weak_scattering(double number_density_per_A3,
                          double scattering_length_angstrom);

// Immutable after construction; names are unique case-insensitively within
// the species list and within the surface list.
class SubstanceRegistry {
 public:
  void add(ParticleSpecies s);
  void add(SubstanceSurface s);

  const std::vector<ParticleSpecies>& species() const { return species_; }
  const std::vector<SubstanceSurface>& surfaces() const { return surfaces_; }

  const ParticleSpecies* find_species(std::string_view name) const;
  const SubstanceSurface* find_surface(std::string_view name) const;

  // Throw qls::UnknownNameError listing the available names.
  const ParticleSpecies& species(std::string_view name) const;
  const SubstanceSurface& surface(std::string_view name) const;

  std::vector<std::string> surface_names() const;

 private:
  std::vector<ParticleSpecies> species_;
  std::vector<SubstanceSurface> surfaces_;
};

// The six species and six surfaces of the bundled data set.
SubstanceRegistry default_registry();

// Parse the JSON substance format (see docs/substance_format.md).
// `source` names the origin in diagnostics.
SubstanceRegistry parse_registry(std::string_view json_text,
                                 std::string_view source = "<memory>");
SubstanceRegistry load_registry(const std::filesystem::path& path);

// Serialize in the same format parse_registry reads.
std::string to_json(const SubstanceRegistry& registry);

// Case-insensitive ASCII comparison used for registry keys.
bool same_name(std::string_view a, std::string_view b);

}  // namespace qls::matter
