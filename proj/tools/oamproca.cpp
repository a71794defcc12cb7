// Command-line front end: subcommand dispatch, config/flag merging, and the
// exit-code contract (0 ok, 1 reported falsification, 2 config, 3 profile
// invariant, 4 I/O, 5 numerical singularity).
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "oamproca/runner.hpp"

using namespace oamproca;

int main(int argc, char** argv) {
  CLI::App app{"Effective photon mass in structured plasmas"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 0;
  app.add_option("-c,--config", config_path, "INI-style config file");
  app.add_option("-j,--jobs", jobs, "sweep worker count (default: $OAMPROCA_JOBS or 1)");

  std::string out_path, out_format;
  auto add_output_flags = [&](CLI::App* sub) {
    sub->fallthrough();  // let -c/-j after the subcommand reach the parent
    sub->add_option("-o,--output", out_path, "output path (default: config or stdout)");
    sub->add_option("--format", out_format, "csv or json (overrides config)");
  };

  CLI::App* mass = app.add_subcommand("mass", "closed-form mass expressions");
  add_output_flags(mass);
  CLI::App* checkp = app.add_subcommand(
      "check-positivity", "squared-mass positivity over a sweep; exit 1 on violation");
  add_output_flags(checkp);

  CLI::App* tower_cmd = app.add_subcommand("tower", "mass/spin tower levels");
  double mstar = 0;
  std::string kind;
  int levels = 0;
  bool include_scalar = false;
  tower_cmd->add_option("--mstar", mstar, "tower mass parameter");
  tower_cmd->add_option("--kind", kind, "bosonic or fermionic");
  tower_cmd->add_option("--levels", levels, "number of levels");
  tower_cmd->add_flag("--include-scalar", include_scalar, "prepend the j=0 level");
  add_output_flags(tower_cmd);

  CLI::App* verify = app.add_subcommand("algebra-verify", "generator commutator table");
  add_output_flags(verify);

  CLI::App* disp = app.add_subcommand("dispersion", "scalar propagator dispersion scan");
  std::string dump_state, dump_rs, dump_format = "csv";
  disp->add_option("--dump-state", dump_state, "write the final scalar state");
  disp->add_option("--dump-rs", dump_rs, "write the [rs] plane-wave field snapshot");
  disp->add_option("--dump-format", dump_format, "csv or bin for dumps")
      ->check(CLI::IsMember({"csv", "bin"}));
  add_output_flags(disp);

  CLI::App* modes = app.add_subcommand("modes", "coupled-mode effective mass spectrum");
  add_output_flags(modes);

  CLI11_PARSE(app, argc, argv);

  try {
    cli::RunConfig cfg;
    if (!config_path.empty()) {
      cfg = cli::parse_config_file(config_path);
    } else {
      // Documented defaults for config-less invocations.
      cfg.proca.profile.n0 = 0.05;
      cfg.proca.E_amp = 1.0;
    }
    if (!out_path.empty()) cfg.output.path = out_path;
    if (!out_format.empty()) {
      if (out_format == "csv") cfg.output.format = cli::OutputSpec::Format::Csv;
      else if (out_format == "json") cfg.output.format = cli::OutputSpec::Format::Json;
      else throw cli::ConfigError("unknown output format: " + out_format, 2);
    }
    if (jobs == 0) {
      if (const char* env = std::getenv("OAMPROCA_JOBS")) jobs = std::atoi(env);
      if (jobs <= 0) jobs = 1;
    }
    if (mstar > 0) cfg.tower.mstar = mstar;
    if (!kind.empty()) {
      if (kind != "bosonic" && kind != "fermionic")
        throw cli::ConfigError("unknown tower kind: " + kind, 2);
      cfg.tower.kind = kind;
    }
    if (levels > 0) cfg.tower.levels = levels;
    if (include_scalar) cfg.tower.include_scalar = true;

    if (mass->parsed()) return cli::run_mass(cfg, jobs);
    if (checkp->parsed()) return cli::run_check_positivity(cfg, jobs);
    if (tower_cmd->parsed()) return cli::run_tower(cfg);
    if (verify->parsed()) return cli::run_algebra_verify(cfg);
    if (disp->parsed()) return cli::run_dispersion(cfg, dump_state, dump_rs, dump_format);
    if (modes->parsed()) return cli::run_modes(cfg);
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const proca::SingularInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
