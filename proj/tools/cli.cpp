#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "output.hpp"
#include "qlsurf/cqed.hpp"
#include "qlsurf/errors.hpp"
#include "qlsurf/matter.hpp"
#include "qlsurf/phases.hpp"
#include "qlsurf/tables.hpp"
#include "qlsurf/zstates.hpp"

namespace qls::cli {
namespace {

struct GlobalOptions {
  std::string substances_file;
  std::string format = "csv";
  std::string output;
  bool verbose = false;
};

struct Table2Options {
  std::string substance;
  std::optional<double> b;
  std::optional<double> V0;
  bool residuals = false;
};

struct StatesOptions {
  std::string substance;
  int levels = 2;
  std::vector<double> fields;
  std::string dump_dir;
  std::optional<double> b;
  std::optional<double> V0;
  std::optional<std::size_t> points;
  std::optional<double> z_min;
  std::optional<double> z_max;
};

struct PhaseOptions {
  double gamma0 = 127.0;
  double t_min = 0.5;
  double t_max = 20.0;
  int points = 40;
  bool log_spacing = false;
};

struct ClassifyOptions {
  double density = 0;
  double temperature = 0;
  double gamma0 = 127.0;
};

struct CoupleOptions {
  double g = 20.0, fx = 6.0, fl = 6.03, grad = 800.0, mass_ratio = 1.0;
  double dz_nm = 10.0, distance_nm = 2e6;
  double field_T = 0.2;
  double kappa = 0.1, gamma = 1.7;
};

matter::SubstanceRegistry load(const GlobalOptions& g) {
  std::string path = g.substances_file;
  if (path.empty()) {
    if (const char* env = std::getenv(kSubstancesEnv); env && *env) path = env;
  }
  if (path.empty()) return matter::default_registry();
  return matter::load_registry(path);
}

Column col(std::string name, int digits = 4) { return {std::move(name), digits}; }

Document table1_doc(const matter::SubstanceRegistry& reg) {
  Document d;
  d.body.columns = {col("particle"), col("m_amu", 5), col("sigma_A", 4),
                    col("epsilon_K", 3), col("Lambda", 3)};
  for (const auto& r : tables::de_boer_table(reg)) {
    d.body.rows.push_back({r.name, r.mass_amu, r.sigma_angstrom, r.epsilon_kelvin,
                           r.lambda});
  }
  return d;
}

constexpr std::array<const char*, 6> kTable2Cols = {"E_z1_meV", "E_z2_meV", "dE_K",
                                                    "f_THz",    "z1_nm",    "z2_nm"};

Document table2_doc(const std::vector<tables::SurfaceStateRow>& rows, bool residuals) {
  Document d;
  auto& c = d.body.columns;
  c = {col("substance"), col("b_A", 3), col("V0_eV", 3), col("eps_r", 4)};
  for (const char* n : kTable2Cols) c.push_back(col(n, n[0] == 'z' ? 3 : 4));
  for (const char* n : kTable2Cols) c.push_back(col(std::string("ref_") + n, 3));
  if (residuals) {
    for (const char* n : kTable2Cols) c.push_back(col(std::string("res_") + n, 2));
  }
  c.push_back(col("conv_E_z1_meV", 2));
  c.push_back(col("conv_E_z2_meV", 2));

  for (const auto& r : rows) {
    std::vector<Cell> row = {r.name, r.b_angstrom, r.V0_eV, r.eps_r,
                             r.E_z1_meV, r.E_z2_meV, r.dE_K, r.f_THz, r.z1_nm, r.z2_nm};
    if (r.reference) {
      const auto& f = *r.reference;
      for (double v : {f.E_z1_meV, f.E_z2_meV, f.dE_K, f.f_THz, f.z1_nm, f.z2_nm}) {
        row.emplace_back(v);
      }
    } else {
      row.insert(row.end(), 6, std::monostate{});
    }
    if (residuals) {
      if (auto res = r.residuals()) {
        for (double v : *res) row.emplace_back(v);
      } else {
        row.insert(row.end(), 6, std::monostate{});
      }
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (r.convergence && k < r.convergence->energy_change_meV.size()) {
        row.emplace_back(r.convergence->energy_change_meV[k]);
      } else {
        row.emplace_back(std::monostate{});
      }
    }
    d.body.rows.push_back(std::move(row));
  }
  return d;
}

void report_residuals(const std::vector<tables::SurfaceStateRow>& rows,
                      const matter::SubstanceRegistry& reg, std::ostream& err) {
  double worst = 0.0;
  std::string where;
  for (const auto& r : rows) {
    const auto res = r.residuals();
    if (!res) continue;
    for (std::size_t k = 0; k < res->size(); ++k) {
      if (std::abs((*res)[k]) > worst) {
        worst = std::abs((*res)[k]);
        where = r.name + " " + kTable2Cols[k];
      }
    }
  }
  err << "max |relative residual| = " << format_number(worst)
      << (where.empty() ? "" : " (" + where + ")") << "\n";
  if (worst <= 0.10) return;

  err << "residual above 10%: b-sensitivity sweep (b = a_s x factor)\n"
      << "substance,factor,b_A,E_z1_meV,E_z2_meV,z1_nm,z2_nm\n";
  for (const auto& r : rows) {
    const auto& s = reg.surface(r.name);
    for (double factor : {0.5, 0.75, 1.0, 1.25, 1.5, 2.0}) {
      const double b = factor * s.scattering_length_angstrom;
      const auto x = tables::surface_states(s, b, r.V0_eV);
      err << s.name << ',' << factor << ',' << format_number(b) << ','
          << format_number(x.E_z1_meV) << ',' << format_number(x.E_z2_meV) << ','
          << format_number(x.z1_nm) << ',' << format_number(x.z2_nm) << '\n';
    }
  }
}

std::vector<double> temperature_grid(const PhaseOptions& o) {
  if (!(o.t_min > 0) || !(o.t_max > o.t_min) || o.points < 2) {
    throw std::invalid_argument(
        "phase-diagram needs 0 < --t-min < --t-max and --points >= 2");
  }
  std::vector<double> t(static_cast<std::size_t>(o.points));
  for (int i = 0; i < o.points; ++i) {
    const double f = static_cast<double>(i) / (o.points - 1);
    t[i] = o.log_spacing ? o.t_min * std::pow(o.t_max / o.t_min, f)
                         : o.t_min + f * (o.t_max - o.t_min);
  }
  return t;
}

Document phase_doc(const phases::MeltingCurve& curve) {
  Document d;
  d.body.columns = {col("T_K", 4), col("n_c1_cm2", 3), col("n_c2_cm2", 3)};
  for (const auto& e : curve.entries) {
    d.body.rows.push_back({e.temperature_K,
                           e.n_c1_cm2 ? Cell{*e.n_c1_cm2} : Cell{},
                           e.n_c2_cm2 ? Cell{*e.n_c2_cm2} : Cell{}});
  }
  Table s;
  s.columns = {col("T_c_K", 3), col("n_c_cm2", 2), col("n_star_cm2", 2)};
  s.rows.push_back({curve.critical.temperature_K, curve.critical.density_cm2,
                    curve.n_star_cm2});
  d.summary = std::move(s);
  return d;
}

zstates::GridSpec states_grid(const StatesOptions& o, const zstates::PotentialSpec& spec) {
  zstates::GridSpec g = zstates::default_grid(spec);
  if (o.z_min) g.z_min_angstrom = *o.z_min;
  if (o.z_max) g.z_max_angstrom = *o.z_max;
  if (o.points) g.points = *o.points;
  zstates::validate(g);
  return g;
}

Document states_doc(const zstates::BoundStateSet& set) {
  Document d;
  d.body.columns = {col("level"), col("energy_meV", 4), col("mean_z_nm", 3),
                    col("node_count"), col("conv_energy_meV", 2)};
  for (std::size_t k = 0; k < set.states.size(); ++k) {
    const auto& s = set.states[k];
    Cell conv;
    if (set.convergence && k < set.convergence->energy_change_meV.size()) {
      conv = set.convergence->energy_change_meV[k];
    }
    d.body.rows.push_back({static_cast<long long>(s.level), s.energy_meV,
                           s.mean_z_nm, static_cast<long long>(s.node_count), conv});
  }
  return d;
}

Document stark_doc(const std::vector<zstates::StarkPoint>& points) {
  Document d;
  d.body.columns = {col("field_V_per_m", 4), col("E_z1_meV", 4), col("bound")};
  for (const auto& p : points) {
    d.body.rows.push_back({p.field_V_per_m,
                           p.ground_energy_meV ? Cell{*p.ground_energy_meV} : Cell{},
                           p.ground_energy_meV.has_value()});
  }
  return d;
}

Document single(std::string name, Cell value, int digits = 4) {
  Document d;
  d.body.columns = {col(std::move(name), digits)};
  d.body.rows.push_back({std::move(value)});
  return d;
}

void emit(const Document& doc, const GlobalOptions& g, std::ostream& out) {
  const auto fmt = parse_format(g.format);
  const std::string text = render(doc, *fmt);
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    throw std::runtime_error("cannot write output file '" + g.output +
                             "' (check the directory exists and is writable)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface-electron states, 2D electron phases and cQED estimates"};
  app.name("qlsurf");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--substances", g.substances_file,
                 std::string("Substance data file (JSON); default from $") +
                     kSubstancesEnv + " or the bundled set");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("-o,--output", g.output, "Write results to this file");
  app.add_flag("-v,--verbose", g.verbose, "Progress messages on stderr");

  auto* t1 = app.add_subcommand("table1", "de Boer parameters of all species");

  Table2Options t2o;
  auto* t2 = app.add_subcommand("table2", "Surface-state eigenproblems for all substances");
  t2->add_option("--substance", t2o.substance, "Only this substance");
  t2->add_option("--b", t2o.b, "Image-potential cutoff b in Angstrom (default a_s)");
  t2->add_option("--V0", t2o.V0, "Barrier height in eV (default tabulated)");
  t2->add_flag("--residuals", t2o.residuals, "Add relative residual columns");

  StatesOptions so;
  auto* st = app.add_subcommand("states", "Bound states for one substance");
  st->add_option("--substance", so.substance, "Substance name")->required();
  st->add_option("--levels", so.levels, "Number of levels")->check(CLI::PositiveNumber);
  st->add_option("--field", so.fields,
                 "Pressing field in V/m; several values run a Stark scan")
      ->delimiter(',');
  st->add_option("--dump-psi", so.dump_dir, "Write psi_<level>.dat files here");
  st->add_option("--b", so.b, "Cutoff b in Angstrom");
  st->add_option("--V0", so.V0, "Barrier height in eV");
  st->add_option("--points", so.points, "Grid points");
  st->add_option("--z-min", so.z_min, "Grid start in Angstrom (< 0)");
  st->add_option("--z-max", so.z_max, "Grid end in Angstrom (> 0)");

  PhaseOptions po;
  auto* pd = app.add_subcommand("phase-diagram", "Wigner-solid melting curves");
  pd->add_option("--gamma0", po.gamma0, "Melting plasma parameter")->check(CLI::PositiveNumber);
  pd->add_option("--t-min", po.t_min, "Lowest temperature (K)");
  pd->add_option("--t-max", po.t_max, "Highest temperature (K)");
  pd->add_option("--points", po.points, "Number of temperatures");
  pd->add_flag("--log", po.log_spacing, "Logarithmic temperature spacing");

  ClassifyOptions co;
  auto* cl = app.add_subcommand("classify", "Phase label of a 2D electron system");
  cl->add_option("--density", co.density, "Electron density (cm^-2)")->required();
  cl->add_option("--temperature", co.temperature, "Temperature (K)")->required();
  cl->add_option("--gamma0", co.gamma0, "Melting plasma parameter");

  CoupleOptions cp;
  auto* cq = app.add_subcommand("couple", "Circuit-QED estimators");
  cq->require_subcommand(1);
  auto* gs = cq->add_subcommand("gs", "Effective spin-photon coupling g_s (MHz)");
  gs->add_option("--g", cp.g, "Charge-photon coupling (MHz)");
  gs->add_option("--fx", cp.fx, "Charge frequency (GHz)");
  gs->add_option("--fl", cp.fl, "Larmor frequency (GHz)");
  gs->add_option("--grad", cp.grad, "dBz/dx (T/m)");
  gs->add_option("--mass-ratio", cp.mass_ratio, "Effective mass / m_e");
  auto* ic = cq->add_subcommand("imagecharge", "Image-charge change dz/D (fraction of e)");
  ic->add_option("--dz-nm", cp.dz_nm, "Height change (nm)");
  ic->add_option("--distance-nm", cp.distance_nm, "Electrode distance (nm)");
  auto* lm = cq->add_subcommand("larmor", "Larmor frequency (GHz)");
  lm->add_option("--field-t", cp.field_T, "Magnetic field (T)");
  auto* sc = cq->add_subcommand("strong", "Strong-coupling check g > kappa, gamma");
  sc->add_option("--g", cp.g, "Coupling (MHz)");
  sc->add_option("--kappa", cp.kappa, "Resonator decay (MHz)");
  sc->add_option("--gamma", cp.gamma, "Qubit linewidth (MHz)");

  std::string export_path;
  auto* sub = app.add_subcommand("substances", "List or export the substance data");
  sub->add_option("--export", export_path, "Write the active data set as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    const auto reg = load(g);

    if (*t1) {
      emit(table1_doc(reg), g, out);
    } else if (*t2) {
      std::vector<tables::SurfaceStateRow> rows;
      std::vector<const matter::SubstanceSurface*> todo;
      if (!t2o.substance.empty()) {
        todo.push_back(&reg.surface(t2o.substance));
      } else {
        for (const auto& s : reg.surfaces()) todo.push_back(&s);
      }
      for (const auto* s : todo) {
        if (g.verbose) err << "solving " << s->name << "\n";
        rows.push_back(tables::surface_states(*s, t2o.b, t2o.V0));
      }
      emit(table2_doc(rows, t2o.residuals), g, out);
      if (t2o.residuals) report_residuals(rows, reg, err);
    } else if (*st) {
      const auto& surface = reg.surface(so.substance);
      auto spec = zstates::surface_spec(surface, so.b, so.V0);
      const auto grid = states_grid(so, spec);
      if (so.fields.size() > 1) {
        emit(stark_doc(zstates::stark_scan(spec, so.fields, grid)), g, out);
      } else {
        if (!so.fields.empty()) spec.pressing_field_V_per_m = so.fields.front();
        const auto profile = zstates::build_potential(spec, grid);
        if (profile.convergence_warning) {
          err << "warning: " << *profile.convergence_warning << "\n";
        }
        const auto set = zstates::solve_bound_states(profile, so.levels);
        if (set.shortfall()) {
          err << "warning: only " << set.states.size() << " of " << set.requested
              << " requested levels are bound\n";
        }
        emit(states_doc(set), g, out);
        if (!so.dump_dir.empty()) {
          const auto files = zstates::dump_wavefunctions(set.states, so.dump_dir);
          if (g.verbose) {
            for (const auto& f : files) err << "wrote " << f.string() << "\n";
          }
        }
      }
    } else if (*pd) {
      const auto temps = temperature_grid(po);
      if (g.verbose) err << "tracing melting curve over " << temps.size() << " temperatures\n";
      const auto curve = phases::melting_curve(po.gamma0, temps);
      for (const auto& e : curve.entries) {
        if (e.bracket_failure) {
          err << "warning: root bracketing failed at T = " << e.temperature_K << " K\n";
        }
      }
      emit(phase_doc(curve), g, out);
    } else if (*cl) {
      const auto p = phases::evaluate(co.density, co.temperature);
      const auto label = phases::classify(co.density, co.temperature, co.gamma0);
      Document d;
      d.body.columns = {col("density_cm2", 4), col("temperature_K", 4), col("gamma0", 4),
                        col("E_F_eV", 4), col("mu_eV", 4), col("K_e_eV", 4),
                        col("U_e_eV", 4), col("gamma", 4), col("phase")};
      d.body.rows.push_back({p.density_cm2, p.temperature_K, co.gamma0, p.fermi_energy_eV,
                             p.chemical_potential_eV, p.kinetic_energy_eV,
                             p.coulomb_energy_eV, p.gamma,
                             std::string(phases::to_string(label))});
      emit(d, g, out);
    } else if (*cq) {
      if (*gs) {
        emit(single("g_s_MHz", cqed::spin_coupling({cp.g, cp.fx, cp.fl, cp.grad,
                                                    cp.mass_ratio})),
             g, out);
      } else if (*ic) {
        emit(single("delta_q_e", cqed::image_charge_delta(cp.dz_nm, cp.distance_nm)), g,
             out);
      } else if (*lm) {
        emit(single("f_L_GHz", cqed::larmor(cp.field_T)), g, out);
      } else {
        const auto v = cqed::strong_coupling({cp.g, cp.kappa, cp.gamma});
        Document d;
        d.body.columns = {col("strong"), col("margin_MHz", 3)};
        d.body.rows.push_back({v.strong, v.margin_MHz});
        emit(d, g, out);
      }
    } else if (*sub) {
      if (!export_path.empty()) {
        std::ofstream f(export_path, std::ios::binary | std::ios::trunc);
        if (!f || !(f << matter::to_json(reg))) {
          throw std::runtime_error("cannot write '" + export_path + "'");
        }
      }
      Document d;
      d.body.columns = {col("surface"), col("n_A3", 3), col("a_s_A", 2), col("eps_r", 4),
                        col("V0_eV", 2), col("V0_weak_scattering_eV", 3)};
      for (const auto& s : reg.surfaces()) {
        d.body.rows.push_back({s.name, s.number_density_per_A3,
                               s.scattering_length_angstrom, s.dielectric_constant,
                               s.barrier_V0_eV,
                               matter::v0_weak_scattering(s.number_density_per_A3,
                                                          s.scattering_length_angstrom)});
      }
      emit(d, g, out);
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

}  // namespace qls::cli
