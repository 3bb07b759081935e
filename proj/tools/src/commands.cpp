#include "slabshift_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "slabshift/electrostatics.hpp"
#include "slabshift/errors.hpp"
#include "slabshift/modes.hpp"
#include "slabshift_cli/sweep.hpp"

#ifndef SLABSHIFT_VERSION
#define SLABSHIFT_VERSION "unknown"
#endif

namespace slabshift::cli {

unsigned jobs_from_environment() {
  const char* env = std::getenv("SLABSHIFT_JOBS");
  if (env == nullptr || *env == '\0') return 0;
  const double v = parse_number(env, "SLABSHIFT_JOBS");
  if (!(v >= 0.0) || v != std::floor(v) || v > 4096) throw InputError("SLABSHIFT_JOBS must be a small non-negative integer");
  return static_cast<unsigned>(v);
}

Table shift_table(const AtomSpec& atom, const Slab& slab, double distance, const ShiftReport& report,
                  units::System u) {
  auto dipole = [u](double v) { return u == units::System::ev_nm ? units::dipole_sq_to_e_nm(v) : v; };
  Table t;
  t.columns = {"transition", "energy", "mu_par_sq", "mu_perp_sq", "zeta", "lambda", "n",
               "w_par", "w_z", "err_est", "regime", "delta_e"};
  const auto transitions = atom.transitions();
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const Transition& tr = transitions[i];
    const ReducedParams p = reduce(slab, tr, distance);
    const WPair& w = report.w[i];
    t.rows.push_back({std::to_string(i), tr.energy(), dipole(tr.mu_par_sq()), dipole(tr.mu_perp_sq()), p.zeta(), p.lambda(), p.n(),
                      w.w_par, w.w_z, w.err_est, std::string(to_string(classify_regime(p).regime)),
                      report.shift.per_transition[i]});
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  t.rows.push_back({std::string("total"), nan, nan, nan, nan, nan, nan, nan, nan, nan, std::string(""),
                    report.shift.value});
  return t;
}

namespace {

double rel_dev(double approx, double full) {
  if (full == 0.0) return approx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (approx - full) / std::abs(full);
}

bool all_isotropic(const AtomSpec& atom) {
  for (const Transition& tr : atom.transitions()) {
    if (!is_isotropic(tr)) return false;
  }
  return true;
}

}  // namespace

AsymptoticReport asymptotic_report(const AtomSpec& atom, const Slab& slab, double distance, const QuadratureSpec& q,
                                   const ApplicabilityPolicy& policy) {
  AsymptoticReport r;
  const ShiftReport full = energy_shift_report(atom, slab, distance, q);
  r.full = full.shift.value;

  bool retarded = true;
  bool nonretarded = true;
  bool intermediate = true;
  for (const Transition& tr : atom.transitions()) {
    const Regime g = classify_regime(reduce(slab, tr, distance)).regime;
    retarded = retarded && g == Regime::retarded;
    nonretarded = nonretarded && g == Regime::nonretarded;
    intermediate = intermediate && g == Regime::intermediate;
  }
  r.regime = retarded ? "retarded" : nonretarded ? "non-retarded" : intermediate ? "intermediate" : "mixed";
  const double l_over_z = slab.thickness() / distance;
  const bool thin = l_over_z <= policy.thin_max_l_over_z;
  const bool thick = l_over_z >= policy.thick_min_l_over_z;

  auto add = [&](std::string name, double value, bool applicable) {
    r.rows.push_back({std::move(name), value, rel_dev(value, r.full), applicable});
  };
  add("halfspace", halfspace_shift(atom, slab.n(), distance, q).value, thick);
  if (!slab.is_half_space()) {
    add("retarded_thin", retarded_thin_shift(atom, slab, distance).shift.value, retarded && thin);
    if (all_isotropic(atom)) {
      add("plate_formula", buhmann_u(static_polarizability(atom), slab.n(), slab.thickness(), distance),
          retarded && thin);
    }
    add("nonretarded_thin", nonretarded_thin_shift(atom, slab, distance).shift.value, nonretarded && thin);
  }
  add("nonretarded", nonretarded_shift(atom, slab, distance).value, nonretarded);
  return r;
}

Table asymptotic_table(const AsymptoticReport& report) {
  Table t;
  t.columns = {"formula", "delta_e", "rel_deviation", "applicable", "regime"};
  t.rows.push_back({std::string("full"), report.full, 0.0, std::string("yes"), report.regime});
  for (const AsymptoticRow& row : report.rows) {
    t.rows.push_back({row.formula, row.value, row.rel_deviation, std::string(row.applicable ? "yes" : "no"),
                      report.regime});
  }
  return t;
}

namespace {

double wave_number_in(double k, units::System u) {
  return u == units::System::ev_nm ? k * units::hbar_c_ev_nm : k;
}

Table modes_table(double k_par, const Slab& slab) {
  Table t;
  t.columns = {"pol", "parity", "k_zd", "kappa", "omega", "residual", "pole_residual"};
  for (const TrappedMode& m : find_all_trapped_modes(k_par, slab)) {
    t.rows.push_back({std::string(to_string(m.pol)), std::string(to_string(m.parity)), m.k_zd, m.kappa, m.omega(),
                      m.residual, pole_alignment_check(m, slab)});
  }
  return t;
}

Table wfun_table(const ReducedParams& p, const QuadratureSpec& q, std::vector<std::string>& notes) {
  const WPair w = w_pair(p, q);
  if (!w.warning.empty()) notes.push_back(w.warning);
  Table t;
  t.columns = {"zeta", "lambda", "n", "w_par", "w_z", "err_est", "regime"};
  t.rows.push_back({p.zeta(), p.lambda(), p.n(), w.w_par, w.w_z, w.err_est,
                    std::string(to_string(classify_regime(p).regime))});
  return t;
}

}  // namespace

int run_command(std::string_view command, const Settings& settings, const RunOptions& options, std::ostream& out,
                std::ostream& err) {
  Manifest manifest;
  manifest.version = SLABSHIFT_VERSION;
  manifest.command = std::string(command);
  manifest.timestamp = options.timestamp.empty() ? current_timestamp() : options.timestamp;
  manifest.inputs = settings;
  try {
    const units::System u = units_from(settings);
    manifest.quad = quad_from(settings);
    manifest.quad.validate();
    Table table;
    int code = kExitOk;
    if (command == "shift") {
      const Slab slab = slab_from(settings, u);
      const AtomSpec atom = atom_from(settings, u);
      const double z = distance_from(settings, u);
      const ShiftReport report = energy_shift_report(atom, slab, z, manifest.quad);
      for (const WPair& w : report.w) {
        if (!w.warning.empty()) manifest.notes.push_back(w.warning);
      }
      table = shift_table(atom, slab, z, report, u);
    } else if (command == "wfun") {
      const ReducedParams p(settings.number("wfun.zeta"), settings.number("wfun.lambda"), settings.number("slab.n"));
      table = wfun_table(p, manifest.quad, manifest.notes);
    } else if (command == "sweep") {
      const SweepSpec spec = sweep_spec_from(settings);
      const SweepResult result = run_sweep(spec, options.jobs);
      table = sweep_table(spec, result);
      if (!result.all_ok()) {
        code = kExitPartialSweep;
        err << "sweep: some grid points failed; see the status column\n";
      }
    } else if (command == "modes") {
      const Slab slab = slab_from(settings, u);
      table = modes_table(wave_number_in(settings.number("modes.k_par"), u), slab);
    } else if (command == "asympt") {
      const Slab slab = slab_from(settings, u);
      const AtomSpec atom = atom_from(settings, u);
      const AsymptoticReport report = asymptotic_report(atom, slab, distance_from(settings, u), manifest.quad);
      if (report.regime == "intermediate") manifest.notes.push_back("intermediate regime: no asymptotic formula applies");
      table = asymptotic_table(report);
    } else {
      throw InputError("unknown command '" + std::string(command) + "'");
    }
    write_table(out, options.format, manifest, table);
    for (const std::string& note : manifest.notes) err << "warning: " << note << '\n';
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << "; best estimate " << format_number(e.best_estimate())
        << " with error bound " << format_number(e.error_bound()) << '\n';
    return kExitConvergence;
  }
}

}  // namespace slabshift::cli
