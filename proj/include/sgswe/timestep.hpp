#pragma once

#include "sgswe/pce.hpp"
#include "sgswe/schemes.hpp"
#include "sgswe/swe_core.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace sgswe {

/// State of the adaptive step-size control.
struct TimeController {
  double cfl = 0.45;
  double safety = 0.9;  // dt <= safety * lambda because the positivity bound is strict
  double lambda = std::numeric_limits<double>::infinity();
  double t = 0.0;
  double t_final = 0.0;
  long restarts = 0;
};

/// min over cells and quadrature nodes of |dx h_i(xi_m) / (F^h_{i+1/2}(xi_m) - F^h_{i-1/2}(xi_m))|.
/// `fluxes` holds nx + 1 interface fluxes. Zero flux differences impose no bound.
/// Throws SolverError(Hyperbolicity) if some h_i(xi_m) <= 0 already.
double positivity_lambda(const PceBasis& basis, const Field& field, const std::vector<Vec>& fluxes);

/// cfl * dx / max_i max|eigenvalue of the flux Jacobian at cell i|.
double cfl_dt(const PceBasis& basis, const Field& field, double cfl, double g);
/// Same, reusing the velocities of an evaluated stage.
double cfl_dt(const PceBasis& basis, const StageEvaluation& stage, double cfl, double dx, double g);

struct PositivityReport {
  bool ok = true;
  long cell = -1;
  long node = -1;
  double min_value = std::numeric_limits<double>::infinity();
};

/// Checks h_i(xi_m) > 0 at every cell and node; reports the first offender.
PositivityReport positivity_check(const PceBasis& basis, const Field& field);

struct StepOutcome {
  double dt = 0.0;
  double lambda = 0.0;
  double cfl_bound = 0.0;
  long restarts = 0;  // restarts spent on this step
};

/// One Shu-Osher SSP-RK3 step with the adaptive positivity restart.
///
/// dt starts at min(cfl_dt, safety * lambda, t_stop - t). Before every
/// Forward-Euler substep the stage lambda is recomputed; if dt exceeds
/// safety * lambda_stage the whole step is restarted from the stored state with
/// dt = safety * lambda_stage. Advances ctl.t (landing exactly on t_stop when
/// the step is clamped) and ctl.restarts.
///
/// Throws SolverError(StepUnderflow) when dt < 1e-14 * t_final, and propagates
/// Hyperbolicity / BlowUp failures with the cell index.
StepOutcome ssp_rk3_step(const PceBasis& basis, Field& field, SchemeKind scheme, double g, TimeController& ctl,
                         double t_stop);

}  // namespace sgswe
