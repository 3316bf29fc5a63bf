#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qlsurf/errors.hpp"
#include "qlsurf/matter.hpp"

using namespace qls::matter;

namespace {

const ParticleSpecies kHe4{"4He", 4.0026, 2.556, 10.2};

std::string message_of(const std::string& json) {
  try {
    parse_registry(json, "test.json");
  } catch (const qls::DataError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("Lennard-Jones landmarks") {
  CHECK(lj_potential(kHe4.sigma_angstrom, kHe4) == doctest::Approx(0.0));
  CHECK(lj_potential(std::pow(2.0, 1.0 / 6.0) * kHe4.sigma_angstrom, kHe4) ==
        doctest::Approx(-kHe4.epsilon_kelvin));
  const ParticleSpecies unit{"u", 1.0, 1.0, 1.0};
  // 4 (0.9^-12 - 0.9^-6) = 4 (3.540706 - 1.881676)
  CHECK(lj_potential(0.9, unit) == doctest::Approx(6.63612).epsilon(1e-5));
  CHECK_THROWS_AS(lj_potential(0.0, unit), std::invalid_argument);
  CHECK_THROWS_AS(lj_potential(-1.0, unit), std::invalid_argument);
}

TEST_CASE("Lennard-Jones sign changes at sigma") {
  for (double f = 0.80; f < 3.0; f += 0.01) {
    const double v = lj_potential(f * kHe4.sigma_angstrom, kHe4);
    if (f < 0.999) CHECK(v > 0.0);
    if (f > 1.001) CHECK(v < 0.0);
  }
}

TEST_CASE("de Boer parameters of the bundled species") {
  const auto reg = default_registry();
  const struct {
    const char* name;
    double lambda;
  } table[] = {{"3He", 3.09}, {"4He", 2.68}, {"Ne", 0.59},
               {"H2", 1.73},  {"HD", 1.41},  {"D2", 1.22}};
  for (const auto& row : table) {
    INFO(row.name);
    CHECK(std::abs(de_boer(reg.species(row.name)) - row.lambda) <= 0.01);
  }
}

TEST_CASE("de Boer decreases with mass at fixed sigma and epsilon") {
  const auto reg = default_registry();
  const double h2 = de_boer(reg.species("H2"));
  const double hd = de_boer(reg.species("HD"));
  const double d2 = de_boer(reg.species("D2"));
  CHECK(h2 > hd);
  CHECK(hd > d2);
  ParticleSpecies s = kHe4;
  double last = de_boer(s);
  for (int i = 0; i < 20; ++i) {
    s.mass_amu *= 1.3;
    const double next = de_boer(s);
    CHECK(next < last);
    last = next;
  }
}

TEST_CASE("weak-scattering barrier") {
  CHECK(v0_weak_scattering(0.0218, 0.0) == 0.0);
  CHECK(v0_weak_scattering(0.0218, 0.62) == doctest::Approx(0.647).epsilon(2e-3));
  CHECK(v0_weak_scattering(0.0460, 0.38) == doctest::Approx(0.837).epsilon(2e-3));
  const double base = v0_weak_scattering(0.03, 0.5);
  CHECK(v0_weak_scattering(0.09, 0.5) == doctest::Approx(3 * base).epsilon(1e-13));
  CHECK(v0_weak_scattering(0.03, 1.75) == doctest::Approx(3.5 * base).epsilon(1e-13));
  CHECK(v0_weak_scattering(0.03, -0.5) == doctest::Approx(-base).epsilon(1e-13));
}

TEST_CASE("default registry contents") {
  const auto reg = default_registry();
  CHECK(reg.species().size() == 6);
  CHECK(reg.surfaces().size() == 6);
  for (const auto& s : reg.surfaces()) {
    INFO(s.name);
    CHECK(s.reference.has_value());
    CHECK(s.number_density_per_A3 > 0);
    CHECK(s.dielectric_constant >= 1);
    CHECK(s.barrier_V0_eV > 0);
    CHECK(s.scattering_length_angstrom > 0);
  }
  CHECK(reg.surface("ne").name == "Ne");
  CHECK(reg.find_surface("nope") == nullptr);
}

TEST_CASE("unknown names list the available ones") {
  const auto reg = default_registry();
  try {
    reg.surface("unknownium");
    FAIL("expected an exception");
  } catch (const qls::UnknownNameError& e) {
    const std::string what = e.what();
    CHECK(contains(what, "unknownium"));
    CHECK(contains(what, "4He"));
    CHECK(contains(what, "D2"));
  }
}

TEST_CASE("registry rejects case-insensitive duplicates") {
  SubstanceRegistry reg;
  reg.add(kHe4);
  CHECK_THROWS_AS(reg.add(ParticleSpecies{"4he", 4.0, 2.5, 10.0}), qls::DataError);
}

TEST_CASE("serialized default registry parses back to the same data") {
  const auto reg = default_registry();
  const auto again = parse_registry(to_json(reg));
  REQUIRE(again.species().size() == reg.species().size());
  REQUIRE(again.surfaces().size() == reg.surfaces().size());
  for (std::size_t i = 0; i < reg.surfaces().size(); ++i) {
    const auto& a = reg.surfaces()[i];
    const auto& b = again.surfaces()[i];
    CHECK(a.name == b.name);
    CHECK(a.number_density_per_A3 == b.number_density_per_A3);
    CHECK(a.barrier_V0_eV == b.barrier_V0_eV);
    CHECK(a.reference->E_z1_meV == b.reference->E_z1_meV);
    CHECK(a.density_limit_cm2 == b.density_limit_cm2);
  }
  CHECK(to_json(again) == to_json(reg));
}

TEST_CASE("shipped data file matches the built-in registry") {
  const auto path = std::filesystem::path(QLSURF_SOURCE_DIR) / "data" / "substances.json";
  REQUIRE(std::filesystem::exists(path));
  CHECK(to_json(load_registry(path)) == to_json(default_registry()));
}

TEST_CASE("data-file diagnostics") {
  const std::string species_ne =
      R"({"name": "Ne", "mass": 20.18, "sigma": 2.749, "epsilon": 35.6})";

  SUBCASE("duplicate name") {
    const auto msg = message_of(R"({"species": [)" + species_ne + "," + species_ne +
                                R"(], "surfaces": []})");
    CHECK(contains(msg, "duplicate"));
    CHECK(contains(msg, "Ne"));
  }
  SUBCASE("negative density names the field") {
    const auto msg = message_of(R"({"species": [], "surfaces": [{"name": "X",
      "number_density": -0.02, "scattering_length": 0.6,
      "dielectric_constant": 1.05, "barrier_V0": 1.0}]})");
    CHECK(contains(msg, "number_density"));
    CHECK(contains(msg, "surfaces[0]"));
  }
  SUBCASE("missing field") {
    const auto msg = message_of(R"({"species": [{"name": "A", "mass": 1, "sigma": 1}],
      "surfaces": []})");
    CHECK(contains(msg, "epsilon"));
  }
  SUBCASE("unknown field") {
    const auto msg = message_of(R"({"species": [{"name": "A", "mass": 1, "sigma": 1,
      "epsilon": 1, "colour": "red"}], "surfaces": []})");
    CHECK(contains(msg, "colour"));
  }
  SUBCASE("syntax error reports the line") {
    const auto msg = message_of("{\n\"species\": [\n}\n");
    CHECK(contains(msg, "test.json"));
    CHECK(contains(msg, "line"));
  }
  SUBCASE("dielectric constant below one") {
    const auto msg = message_of(R"({"species": [], "surfaces": [{"name": "X",
      "number_density": 0.02, "scattering_length": 0.6,
      "dielectric_constant": 0.9, "barrier_V0": 1.0}]})");
    CHECK(contains(msg, "dielectric_constant"));
  }
}

TEST_CASE("missing file is a data error") {
  CHECK_THROWS_AS(load_registry("/nonexistent/substances.json"), qls::DataError);
}
