#include "sgswe/driver.hpp"

#include "sgswe/experiments.hpp"
#include "sgswe/schemes.hpp"
#include "sgswe/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

namespace sgswe {

int exit_code_for(FailureKind kind) {
  switch (kind) {
    case FailureKind::Hyperbolicity: return kExitPositivity;
    case FailureKind::BlowUp: return kExitBlowUp;
    case FailureKind::Numerical: return kExitBlowUp;
    case FailureKind::StepUnderflow: return kExitUnderflow;
  }
  return kExitBlowUp;
}

namespace {

const char* kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::Hyperbolicity: return "hyperbolicity/positivity failure";
    case FailureKind::BlowUp: return "blow-up";
    case FailureKind::StepUnderflow: return "time step underflow";
    case FailureKind::Numerical: return "numerical failure";
  }
  return "failure";
}

void check_step(const PceBasis& basis, const Field& field, const SchemeConfig& cfg, CheckSummary& s) {
  ++s.steps_checked;
  if (!positivity_check(basis, field).ok) ++s.positivity_violations;
  const StageEvaluation stage = semidiscrete_rhs(basis, field, cfg.scheme, cfg.g);
  for (const EnergyBalance& b : energy_balance(basis, stage, cfg.g, field.dx)) {
    const double scale = std::max(b.scale, 1e-300);
    const double ratio = cfg.scheme == SchemeKind::EC ? std::abs(b.residual) / scale : b.residual / scale;
    s.worst_residual_ratio = std::max(s.worst_residual_ratio, ratio);
    if (ratio > 1e-10) ++s.energy_violations;
  }
}

}  // namespace

RunResult run(const SchemeConfig& cfg, const RunOptions& opts) {
  RunResult res;
  const PceBasis basis = build_basis(cfg.K);
  TimeController ctl;
  ctl.cfl = cfg.cfl;
  ctl.t_final = cfg.t_final;

  const bool write = opts.write_files && !opts.check;
  try {
    res.field = build_experiment(cfg, basis);
    if (write) std::filesystem::create_directories(cfg.output_dir);
    const auto out_path = [&](const std::string& name) {
      return (std::filesystem::path(cfg.output_dir) / name).string();
    };

    const double E0 = total_energy(basis, res.field, cfg.g);
    res.records.push_back(make_record(basis, res.field, cfg.g, 0.0, 0, E0));
    if (opts.on_step) opts.on_step(basis, res.field, 0.0);
    if (opts.check) check_step(basis, res.field, cfg, res.check);

    for (double ts : cfg.snapshot_times) {
      while (ctl.t < ts) {
        try {
          const StepOutcome step = ssp_rk3_step(basis, res.field, cfg.scheme, cfg.g, ctl, ts);
          if (opts.log && step.restarts > 0) {
            *opts.log << "t=" << ctl.t << " dt=" << step.dt << " lambda=" << step.lambda
                      << " restarts=" << step.restarts << '\n';
          }
        } catch (const SolverError& e) {
          throw std::isnan(e.time()) ? e.at_time(ctl.t) : e;
        }
        ++res.steps;
        const PositivityReport p = positivity_check(basis, res.field);
        if (!p.ok) {
          throw SolverError(FailureKind::Hyperbolicity, "accepted step left a non-positive node height", p.cell,
                            ctl.t);
        }
        res.records.push_back(make_record(basis, res.field, cfg.g, ctl.t, ctl.restarts, E0));
        if (opts.on_step) opts.on_step(basis, res.field, ctl.t);
        if (opts.check) check_step(basis, res.field, cfg, res.check);
      }
      if (write) write_snapshot(out_path(snapshot_name(ts)), basis, res.field);
    }
    if (write) write_energy_series(out_path("energy.csv"), res.records, opts.debug_energy);
  } catch (const SolverError& e) {
    res.exit_code = exit_code_for(e.kind());
    std::ostringstream msg;
    msg << kind_name(e.kind()) << ": " << e.what();
    if (!std::isnan(e.time())) msg << " (t = " << e.time();
    else msg << " (t = " << ctl.t;
    if (e.cell() >= 0) msg << ", cell " << e.cell();
    msg << ")";
    res.message = msg.str();
  } catch (const ConfigError& e) {
    res.exit_code = kExitConfig;
    res.message = std::string("configuration error: ") + e.what();
  }
  res.t = ctl.t;
  res.restarts = ctl.restarts;

  if (res.exit_code == kExitOk && opts.check &&
      (res.check.energy_violations > 0 || res.check.positivity_violations > 0)) {
    res.exit_code = kExitCheckFailed;
    res.message = "check failed";
  }
  return res;
}

}  // namespace sgswe
