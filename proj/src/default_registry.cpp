#include "qlsurf/matter.hpp"

namespace qls::matter {

SubstanceRegistry default_registry() {
  SubstanceRegistry reg;
  // name, m (amu), sigma (A), eps (K)
  reg.add(ParticleSpecies{"3He", 3.0160, 2.556, 10.2});
  reg.add(ParticleSpecies{"4He", 4.0026, 2.556, 10.2});
  reg.add(ParticleSpecies{"Ne", 20.180, 2.749, 35.6});
  reg.add(ParticleSpecies{"H2", 2.0157, 2.928, 37.0});
  reg.add(ParticleSpecies{"HD", 3.0219, 2.928, 37.0});
  reg.add(ParticleSpecies{"D2", 4.0282, 2.928, 37.0});

  // name, n (A^-3), a_s (A), eps_r, V0 (eV), reference row
  // {E_z1 meV, E_z2 meV, dE K, f THz, <z>_1 nm, <z>_2 nm}
  reg.add(SubstanceSurface{"3He", 0.0164, 0.62, 1.042, 0.9,
                           ReferenceRow{-0.382, -0.093, 3.4, 0.070, 14.5, 59.9},
                           std::nullopt});
  // free-surface instability of liquid helium caps the electron density
  reg.add(SubstanceSurface{"4He", 0.0218, 0.62, 1.056, 1.1,
                           ReferenceRow{-0.676, -0.163, 5.9, 0.124, 10.8, 45.0},
                           2.4e9});
  reg.add(SubstanceSurface{"Ne", 0.0460, 0.38, 1.244, 0.7,
                           ReferenceRow{-17.4, -3.24, 165, 3.43, 1.66, 9.04},
                           std::nullopt});
  reg.add(SubstanceSurface{"H2", 0.0266, 0.66, 1.290, 1.7,
                           ReferenceRow{-16.5, -3.74, 148, 3.08, 2.01, 9.09},
                           std::nullopt});
  reg.add(SubstanceSurface{"HD", 0.0293, 0.66, 1.302, 1.9,
                           ReferenceRow{-17.4, -3.98, 156, 3.24, 1.97, 8.84},
                           std::nullopt});
  reg.add(SubstanceSurface{"D2", 0.0308, 0.66, 1.341, 2.1,
                           ReferenceRow{-21.3, -4.89, 191, 3.97, 1.78, 7.97},
                           std::nullopt});
  return reg;
}

}  // namespace qls::matter
