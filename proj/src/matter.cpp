#include "qlsurf/matter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlsurf/errors.hpp"
#include "qlsurf/units.hpp"

namespace qls::matter {

namespace c = units::codata;
using nlohmann::json;

bool same_name(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

namespace {

void require(bool ok, std::string_view what, std::string_view field,
             std::string_view condition) {
  if (!ok) {
    throw DataError(std::string(what) + ": field '" + std::string(field) +
                    "' must be " + std::string(condition));
  }
}

std::string label(std::string_view kind, const std::string& name) {
  return std::string(kind) + " '" + name + "'";
}

}  // namespace

void validate(const ParticleSpecies& s) {
  const auto what = label("species", s.name);
  require(!s.name.empty(), what, "name", "non-empty");
  require(std::isfinite(s.mass_amu) && s.mass_amu > 0, what, "mass", "> 0");
  require(std::isfinite(s.sigma_angstrom) && s.sigma_angstrom > 0, what,
          "sigma", "> 0");
  require(std::isfinite(s.epsilon_kelvin) && s.epsilon_kelvin > 0, what,
          "epsilon", "> 0");
}

void validate(const SubstanceSurface& s) {
  const auto what = label("surface", s.name);
  require(!s.name.empty(), what, "name", "non-empty");
  require(std::isfinite(s.number_density_per_A3) && s.number_density_per_A3 > 0,
          what, "number_density", "> 0");
  require(std::isfinite(s.scattering_length_angstrom) &&
              s.scattering_length_angstrom > 0,
          what, "scattering_length", "> 0");
  require(std::isfinite(s.dielectric_constant) && s.dielectric_constant >= 1,
          what, "dielectric_constant", ">= 1");
  require(std::isfinite(s.barrier_V0_eV) && s.barrier_V0_eV > 0, what,
          "barrier_V0", "> 0");
  if (s.density_limit_cm2) {
    require(*s.density_limit_cm2 > 0, what, "density_limit", "> 0");
  }
}

double lj_potential(double r_angstrom, const ParticleSpecies& species) {
  if (!(r_angstrom > 0)) {
    throw std::invalid_argument("lj_potential: r must be > 0");
  }
  const double x6 = std::pow(species.sigma_angstrom / r_angstrom, 6);
  return 4.0 * species.epsilon_kelvin * (x6 * x6 - x6);
}

double de_boer(const ParticleSpecies& species) {
  const double m = species.mass_amu * c::atomic_mass_unit;
  const double eps = species.epsilon_kelvin * c::boltzmann;
  const double sigma = species.sigma_angstrom * 1e-10;
  return c::planck / (sigma * std::sqrt(m * eps));
}

double v0_weak_scattering(double number_density_per_A3,
                          double scattering_length_angstrom) {
  if (number_density_per_A3 < 0) {
    throw std::invalid_argument("v0_weak_scattering: density must be >= 0");
  }
  // hbar^2/m_e in eV A^2
  const double hbar2_over_m =
      c::hbar * c::hbar / c::electron_mass / c::elementary_charge * 1e20;
  return 2.0 * au::pi * hbar2_over_m * number_density_per_A3 *
         scattering_length_angstrom;
}

void SubstanceRegistry::add(ParticleSpecies s) {
  validate(s);
  if (find_species(s.name)) {
    throw DataError("duplicate species name '" + s.name + "'");
  }
  species_.push_back(std::move(s));
}

void SubstanceRegistry::add(SubstanceSurface s) {
  validate(s);
  if (find_surface(s.name)) {
    throw DataError("duplicate surface name '" + s.name + "'");
  }
  surfaces_.push_back(std::move(s));
}

const ParticleSpecies* SubstanceRegistry::find_species(
    std::string_view name) const {
  auto it = std::ranges::find_if(
      species_, [&](const auto& s) { return same_name(s.name, name); });
  return it == species_.end() ? nullptr : &*it;
}

const SubstanceSurface* SubstanceRegistry::find_surface(
    std::string_view name) const {
  auto it = std::ranges::find_if(
      surfaces_, [&](const auto& s) { return same_name(s.name, name); });
  return it == surfaces_.end() ? nullptr : &*it;
}

namespace {

template <class Range>
std::string name_list(const Range& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item.name;
  }
  return out;
}

}  // namespace

const ParticleSpecies& SubstanceRegistry::species(std::string_view name) const {
  if (const auto* s = find_species(name)) return *s;
  throw UnknownNameError("unknown species '" + std::string(name) +
                         "'; available: " + name_list(species_));
}

const SubstanceSurface& SubstanceRegistry::surface(std::string_view name) const {
  if (const auto* s = find_surface(name)) return *s;
  throw UnknownNameError("unknown substance '" + std::string(name) +
                         "'; available: " + name_list(surfaces_));
}

std::vector<std::string> SubstanceRegistry::surface_names() const {
  std::vector<std::string> out;
  for (const auto& s : surfaces_) out.push_back(s.name);
  return out;
}

// ---------------------------------------------------------------------------
// JSON format

namespace {

double number_field(const json& obj, std::string_view field,
                    const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw DataError(where + ": missing required field '" + std::string(field) +
                    "'");
  }
  if (!it->is_number()) {
    throw DataError(where + ": field '" + std::string(field) +
                    "' must be a number");
  }
  return it->get<double>();
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::ranges::find(known, key) == known.end()) {
      throw DataError(where + ": unknown field '" + key + "'");
    }
  }
}

std::string entry_name(const json& obj, const std::string& where) {
  auto it = obj.find("name");
  if (it == obj.end()) {
    throw DataError(where + ": missing required field 'name'");
  }
  if (!it->is_string()) {
    throw DataError(where + ": field 'name' must be a string");
  }
  return it->get<std::string>();
}

// Validation errors carry the entry position so they can be found in a file.
template <class T>
void add_checked(SubstanceRegistry& reg, T item, const std::string& where) {
  try {
    reg.add(std::move(item));
  } catch (const DataError& e) {
    throw DataError(where + ": " + e.what());
  }
}

}  // namespace

SubstanceRegistry parse_registry(std::string_view json_text,
                                 std::string_view source) {
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(src + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw DataError(src + ": top level must be an object with 'species' and "
                          "'surfaces'");
  }
  reject_unknown(doc, {"species", "surfaces"}, src);

  SubstanceRegistry reg;
  if (auto it = doc.find("species"); it != doc.end()) {
    if (!it->is_array()) throw DataError(src + ": 'species' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      std::string where = src + ": species[" + std::to_string(i) + "]";
      if (!e.is_object()) throw DataError(where + ": must be an object");
      reject_unknown(e, {"name", "mass", "sigma", "epsilon"}, where);
      ParticleSpecies s{entry_name(e, where), number_field(e, "mass", where),
                        number_field(e, "sigma", where),
                        number_field(e, "epsilon", where)};
      add_checked(reg, std::move(s), where);
    }
  }
  if (auto it = doc.find("surfaces"); it != doc.end()) {
    if (!it->is_array()) throw DataError(src + ": 'surfaces' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      std::string where = src + ": surfaces[" + std::to_string(i) + "]";
      if (!e.is_object()) throw DataError(where + ": must be an object");
      reject_unknown(e,
                     {"name", "number_density", "scattering_length",
                      "dielectric_constant", "barrier_V0", "reference",
                      "density_limit"},
                     where);
      SubstanceSurface s{entry_name(e, where),
                         number_field(e, "number_density", where),
                         number_field(e, "scattering_length", where),
                         number_field(e, "dielectric_constant", where),
                         number_field(e, "barrier_V0", where),
                         std::nullopt,
                         std::nullopt};
      if (auto ref = e.find("reference"); ref != e.end() && !ref->is_null()) {
        const std::string rw = where + ".reference";
        if (!ref->is_object()) throw DataError(rw + ": must be an object");
        reject_unknown(*ref,
                       {"E_z1", "E_z2", "dE_K", "f_THz", "z1_nm", "z2_nm"}, rw);
        s.reference = ReferenceRow{
            number_field(*ref, "E_z1", rw), number_field(*ref, "E_z2", rw),
            number_field(*ref, "dE_K", rw), number_field(*ref, "f_THz", rw),
            number_field(*ref, "z1_nm", rw), number_field(*ref, "z2_nm", rw)};
      }
      if (auto lim = e.find("density_limit"); lim != e.end() && !lim->is_null()) {
        s.density_limit_cm2 = number_field(e, "density_limit", where);
      }
      add_checked(reg, std::move(s), where);
    }
  }
  return reg;
}

SubstanceRegistry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open substance file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str(), path.string());
}

std::string to_json(const SubstanceRegistry& registry) {
  nlohmann::ordered_json doc;
  doc["species"] = nlohmann::ordered_json::array();
  for (const auto& s : registry.species()) {
    doc["species"].push_back({{"name", s.name},
                              {"mass", s.mass_amu},
                              {"sigma", s.sigma_angstrom},
                              {"epsilon", s.epsilon_kelvin}});
  }
  doc["surfaces"] = nlohmann::ordered_json::array();
  for (const auto& s : registry.surfaces()) {
    nlohmann::ordered_json e = {{"name", s.name},
              {"number_density", s.number_density_per_A3},
              {"scattering_length", s.scattering_length_angstrom},
              {"dielectric_constant", s.dielectric_constant},
              {"barrier_V0", s.barrier_V0_eV}};
    if (s.reference) {
      const auto& r = *s.reference;
      e["reference"] = {{"E_z1", r.E_z1_meV}, {"E_z2", r.E_z2_meV},
                        {"dE_K", r.dE_K},     {"f_THz", r.f_THz},
                        {"z1_nm", r.z1_nm},   {"z2_nm", r.z2_nm}};
    }
    if (s.density_limit_cm2) e["density_limit"] = *s.density_limit_cm2;
    doc["surfaces"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qls::matter
