#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "slabshift_cli/commands.hpp"

using namespace slabshift::cli;

namespace {

struct Common {
  std::string config;
  std::string output;
  std::string format = "csv";
  std::optional<unsigned> jobs;
  std::optional<std::string> rel_tol;
  std::optional<std::string> units;
  std::vector<std::string> sets;
};

void add_common(CLI::App& app, Common& c) {
  app.add_option("--config", c.config, "key = value configuration file");
  app.add_option("--output", c.output, "write the table here instead of stdout");
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", c.jobs, "worker threads (default: $SLABSHIFT_JOBS or all cores)");
  app.add_option("--rel-tol", c.rel_tol, "quadrature relative tolerance");
  app.add_option("--units", c.units, "natural or eV-nm")->check(CLI::IsMember({"natural", "eV-nm"}));
  app.add_option("--set", c.sets, "override any config key: key=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder shift of an atom near a dielectric slab"};
  app.require_subcommand(1);

  Common common;
  std::map<std::string, std::optional<std::string>> flags;
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
    sub->add_option(name, flags[key], help);
  };

  CLI::App* shift = app.add_subcommand("shift", "energy shift of the configured atom");
  CLI::App* wfun = app.add_subcommand("wfun", "W functions at one (zeta, lambda, n)");
  CLI::App* sweep = app.add_subcommand("sweep", "W functions over a parameter grid");
  CLI::App* modes = app.add_subcommand("modes", "trapped-mode table at one k_par");
  CLI::App* asympt = app.add_subcommand("asympt", "full shift against the asymptotic formulas");
  for (CLI::App* sub : {shift, wfun, sweep, modes, asympt}) add_common(*sub, common);
  for (CLI::App* sub : {shift, modes, asympt, wfun, sweep}) flag(sub, "--n", "slab.n", "refractive index");
  for (CLI::App* sub : {shift, modes, asympt}) flag(sub, "--L", "slab.L", "slab thickness (inf: half-space)");
  for (CLI::App* sub : {shift, asympt}) flag(sub, "--Z", "geometry.Z", "atom-surface distance");
  flag(wfun, "--zeta", "wfun.zeta", "Z E");
  flag(wfun, "--lambda", "wfun.lambda", "L E");
  flag(sweep, "--axis", "sweep.axis", "zeta, lambda or n");
  flag(sweep, "--lo", "sweep.lo", "grid start");
  flag(sweep, "--hi", "sweep.hi", "grid end");
  flag(sweep, "--points", "sweep.points", "grid size");
  flag(sweep, "--scale", "sweep.scale", "linear or log");
  flag(sweep, "--zeta", "sweep.zeta", "fixed zeta value(s), comma-separated");
  flag(sweep, "--lambda", "sweep.lambda", "fixed lambda value(s), comma-separated");
  flag(modes, "--k-par", "modes.k_par", "transverse wave number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  const CLI::App* chosen = app.get_subcommands().front();

  RunOptions options;
  Settings settings;
  try {
    if (!common.config.empty()) settings = Settings::load(common.config);
    Settings overrides;
    for (const auto& [key, value] : flags) {
      if (value) overrides.set(key, *value);
    }
    if (common.rel_tol) overrides.set("quad.rel_tol", *common.rel_tol);
    if (common.units) overrides.set("units", *common.units);
    for (const std::string& kv : common.sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--set expects key=value, got '" + kv + "'");
      overrides.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    settings.merge(overrides);
    options.format = format_from(common.format);
    options.jobs = common.jobs ? *common.jobs : jobs_from_environment();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }

  if (common.output.empty()) return run_command(chosen->get_name(), settings, options, std::cout, std::cerr);
  std::ofstream out(common.output);
  if (!out) {
    std::cerr << "input error: cannot write '" << common.output << "'\n";
    return kExitInput;
  }
  return run_command(chosen->get_name(), settings, options, out, std::cerr);
}
