#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qlsurf/units.hpp"
#include "qlsurf/zstates.hpp"

namespace qls::zstates {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// e^2 in eV*Angstrom
constexpr double kE2 = units::codata::coulomb_eV_angstrom;

// Field term e E z in eV for z in Angstrom.
double field_eV(double field_V_per_m, double z_angstrom) {
  return field_V_per_m * z_angstrom * 1e-10;
}

// Integral of -Z e^2 / (z + b) over [lo, hi] (lo >= 0), in eV*Angstrom.
double image_integral(double strength, double b, double lo, double hi) {
  return -strength * kE2 * std::log((hi + b) / (lo + b));
}

struct PointSampler {
  const PotentialSpec& spec;
  double cap;  // Interface: smallest z used in the pole term

  double operator()(const RegularizedImage& p, double z) const {
    if (z < 0) return p.V0_eV;
    return -image_charge(p.eps_r) * kE2 / (z + p.b_angstrom) +
           field_eV(spec.pressing_field_V_per_m, z);
  }
  double operator()(const InfiniteBarrierImage& p, double z) const {
    if (z < 0) return kInf;
    if (z == 0) return -kInf;
    return -image_charge(p.eps_r) * kE2 / z +
           field_eV(spec.pressing_field_V_per_m, z);
  }
  double operator()(const Interface& p, double z) const {
    if (z < 0) return p.V_below_eV;
    const double zp = std::max(z, cap);
    if (zp == 0) return -kInf;
    const double t = std::tanh(z / p.zeta_angstrom);
    return -image_charge(p.eps_r_below) * kE2 / zp + p.V_above_eV * t * t +
           field_eV(spec.pressing_field_V_per_m, z);
  }
};

// Average over the cell [z - h/2, z + h/2] for the image variants.
double cell_average(const PotentialSpec& spec, double z, double h) {
  const double lo = z - 0.5 * h;
  const double hi = z + 0.5 * h;
  const double E = spec.pressing_field_V_per_m;
  const double vac_lo = std::max(lo, 0.0);
  const double vac_len = hi > 0 ? hi - vac_lo : 0.0;
  const double sub_len = std::max(std::min(hi, 0.0) - lo, 0.0);
  // mean of z over the vacuum part times its length
  const double field_part =
      vac_len > 0 ? field_eV(E, 0.5 * (vac_lo + hi)) * vac_len : 0.0;

  if (const auto* p = std::get_if<RegularizedImage>(&spec.shape)) {
    double sum = p->V0_eV * sub_len + field_part;
    if (vac_len > 0) {
      sum += image_integral(image_charge(p->eps_r), p->b_angstrom, vac_lo, hi);
    }
    return sum / h;
  }
  const auto& p = std::get<InfiniteBarrierImage>(spec.shape);
  // hard wall wherever the cell reaches z <= 0
  if (lo <= 0) return kInf;
  return (image_integral(image_charge(p.eps_r), 0.0, lo, hi) + field_part) / h;
}

double asymptote_of(const PotentialSpec& spec) {
  if (spec.pressing_field_V_per_m > 0) return kInf;
  if (spec.pressing_field_V_per_m < 0) return -kInf;
  if (const auto* p = std::get_if<Interface>(&spec.shape)) {
    return std::min(p->V_below_eV, p->V_above_eV);
  }
  return 0.0;
}

// Size of the lowest state, used to judge whether the box is large enough.
double expected_extent_angstrom(const PotentialSpec& spec) {
  if (const auto* p = std::get_if<Interface>(&spec.shape)) {
    return p->zeta_angstrom;
  }
  const double eps = std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Interface>) {
          return s.eps_r_below;
        } else {
          return s.eps_r;
        }
      },
      spec.shape);
  const double Z = image_charge(eps);
  if (Z <= 0) return kInf;
  return 1.5 * units::codata::bohr_angstrom / Z;
}

}  // namespace

double image_charge(double eps_r) { return (eps_r - 1.0) / (4.0 * (eps_r + 1.0)); }

void validate(const PotentialSpec& spec) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RegularizedImage>) {
          if (!(p.eps_r >= 1)) fail("eps_r must be >= 1");
          if (!(p.b_angstrom > 0)) fail("b must be > 0");
          if (!std::isfinite(p.V0_eV)) fail("V0 must be finite");
        } else if constexpr (std::is_same_v<T, InfiniteBarrierImage>) {
          if (!(p.eps_r >= 1)) fail("eps_r must be >= 1");
        } else {
          if (!(p.eps_r_below >= 1)) fail("eps_r must be >= 1");
          if (!(p.zeta_angstrom > 0)) fail("zeta must be > 0");
          if (!std::isfinite(p.V_below_eV) || !std::isfinite(p.V_above_eV)) {
            fail("barriers must be finite");
          }
        }
      },
      spec.shape);
  if (!std::isfinite(spec.pressing_field_V_per_m)) fail("field must be finite");
}

void validate(const GridSpec& g) {
  if (g.points < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (!(g.z_min_angstrom < 0 && g.z_max_angstrom > 0)) {
    throw std::invalid_argument("grid must satisfy z_min < 0 < z_max");
  }
}

double potential_at(const PotentialSpec& spec, double z_angstrom) {
  PointSampler sample{spec, 0.0};
  return std::visit([&](const auto& p) { return sample(p, z_angstrom); },
                    spec.shape);
}

GridSpec default_grid(const PotentialSpec& spec) {
  constexpr double z_min = -20.0;
  if (std::holds_alternative<Interface>(spec.shape)) {
    // z=0 sits midway between nodes so the first vacuum sample is at h/2
    constexpr double h = 0.02;
    constexpr double z_max = 100.0;
    const double k = std::ceil(-z_min / h);
    const double lo = -(k + 0.5) * h;
    const auto points = static_cast<std::size_t>(std::ceil((z_max - lo) / h)) + 1;
    return {lo, lo + h * static_cast<double>(points - 1), points};
  }
  const double extent = expected_extent_angstrom(spec);
  const double a_over_Z = extent / 1.5;
  const double h_max = std::isfinite(a_over_Z) ? a_over_Z / 200.0 : 0.1;
  const double h = -z_min / std::ceil(-z_min / h_max);
  const double z_max_target = std::isfinite(extent) ? 20.0 * extent : 1000.0;
  const auto points =
      static_cast<std::size_t>(std::ceil((z_max_target - z_min) / h)) + 1;
  return {z_min, z_min + h * static_cast<double>(points - 1), points};
}

PotentialProfile build_potential(const PotentialSpec& spec, const GridSpec& grid) {
  validate(spec);
  validate(grid);
  PotentialProfile out{grid, {}, asymptote_of(spec), spec, std::nullopt};
  out.samples_eV.resize(grid.points);
  const double h = grid.spacing();

  if (std::holds_alternative<Interface>(spec.shape)) {
    PointSampler sample{spec, 0.5 * h};
    const auto& p = std::get<Interface>(spec.shape);
    for (std::size_t i = 0; i < grid.points; ++i) {
      out.samples_eV[i] = sample(p, grid.z(i));
    }
  } else {
    for (std::size_t i = 0; i < grid.points; ++i) {
      double z = grid.z(i);
      if (std::abs(z) < 1e-9 * h) z = 0.0;
      out.samples_eV[i] = cell_average(spec, z, h);
    }
  }

  const double extent = expected_extent_angstrom(spec);
  if (grid.z_max_angstrom < 10.0 * extent) {
    out.convergence_warning =
        "z_max = " + std::to_string(grid.z_max_angstrom) +
        " A is below 10x the expected state extent (" +
        std::to_string(extent) + " A); energies may be box-limited";
  }
  return out;
}

}  // namespace qls::zstates
