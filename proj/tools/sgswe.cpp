#include "sgswe/config.hpp"
#include "sgswe/driver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Galerkin shallow water solver"};
  app.require_subcommand(1);

  std::string config_path, scheme, out_dir;
  std::size_t nx = 0;
  double cfl = 0.0;
  bool check = false, debug_energy = false, verbose = false;

  CLI::App* run = app.add_subcommand("run", "integrate an experiment and write CSV output");
  run->add_option("--config", config_path, "key = value configuration file")->required();
  run->add_option("--scheme", scheme, "EC, ES1 or ES2");
  run->add_option("--nx", nx, "number of cells");
  run->add_option("--cfl", cfl, "CFL constant");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--check", check, "check energy balance and positivity every step, write nothing");
  run->add_flag("--debug-energy", debug_energy, "also emit relative energy against E(0)");
  run->add_flag("-v,--verbose", verbose, "log restarted steps");

  CLI11_PARSE(app, argc, argv);

  sgswe::SchemeConfig cfg;
  try {
    cfg = sgswe::load_config(config_path);
    if (!scheme.empty()) sgswe::apply_setting(cfg, "scheme", scheme);
    if (run->count("--nx")) sgswe::apply_setting(cfg, "nx", std::to_string(nx));
    if (run->count("--cfl")) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", cfl);
      sgswe::apply_setting(cfg, "cfl", buf);
    }
    if (!out_dir.empty()) sgswe::apply_setting(cfg, "output_dir", out_dir);
    sgswe::validate(cfg);
  } catch (const sgswe::ConfigError& e) {
    std::cerr << "sgswe: configuration error: " << e.what() << '\n';
    return sgswe::kExitConfig;
  }

  sgswe::RunOptions opts;
  opts.check = check;
  opts.debug_energy = debug_energy;
  if (verbose) opts.log = &std::cerr;

  sgswe::RunResult res;
  try {
    res = sgswe::run(cfg, opts);
  } catch (const std::exception& e) {
    std::cerr << "sgswe: " << e.what() << '\n';
    return 1;
  }

  std::cout << sgswe::to_string(cfg.experiment) << ' ' << sgswe::to_string(cfg.scheme) << " K=" << cfg.K
            << " nx=" << cfg.nx << " t=" << res.t << " steps=" << res.steps << " restarts=" << res.restarts;
  if (!res.records.empty()) std::cout << " relative_energy=" << res.records.back().relative_energy;
  std::cout << '\n';
  if (check) {
    std::cout << "check: steps=" << res.check.steps_checked << " energy_violations=" << res.check.energy_violations
              << " positivity_violations=" << res.check.positivity_violations
              << " worst_residual_ratio=" << res.check.worst_residual_ratio << '\n';
  }
  if (res.exit_code != sgswe::kExitOk) std::cerr << "sgswe: " << res.message << '\n';
  return res.exit_code;
}
