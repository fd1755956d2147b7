#include "sgswe/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sgswe {

namespace {

// out = a * x + b * (y + dt * rhs), cellwise on both h and q blocks.
Field combine(double a, const Field& x, double b, const Field& y, double dt, const std::vector<Vec>& rhs) {
  Field out = x;
  const auto K = x.cells.front().h.size();
  for (std::size_t i = 0; i < x.nx(); ++i) {
    out.cells[i].h = a * x.cells[i].h + b * (y.cells[i].h + dt * rhs[i].head(K));
    out.cells[i].q = a * x.cells[i].q + b * (y.cells[i].q + dt * rhs[i].tail(K));
  }
  return out;
}

void require_finite(const Field& f) {
  for (std::size_t i = 0; i < f.nx(); ++i) {
    if (!f.cells[i].h.allFinite() || !f.cells[i].q.allFinite()) {
      throw SolverError(FailureKind::BlowUp, "non-finite state after time step", static_cast<long>(i));
    }
  }
}

}  // namespace

double positivity_lambda(const PceBasis& basis, const Field& field, const std::vector<Vec>& fluxes) {
  const std::size_t nx = field.nx();
  if (fluxes.size() != nx + 1) throw std::invalid_argument("positivity_lambda: expected nx + 1 interface fluxes");
  const auto K = static_cast<Eigen::Index>(basis.size());

  std::vector<Vec> flux_nodes(nx + 1);
  for (std::size_t f = 0; f <= nx; ++f) flux_nodes[f] = basis.table() * fluxes[f].head(K);

  double lambda = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nx; ++i) {
    const Vec h_nodes = basis.evaluate_at_nodes(field.cells[i].h);
    for (Eigen::Index m = 0; m < h_nodes.size(); ++m) {
      if (!(h_nodes[m] > 0.0)) {
        throw SolverError(FailureKind::Hyperbolicity,
                          "water height non-positive at quadrature node " + std::to_string(m),
                          static_cast<long>(i));
      }
      const double diff = flux_nodes[i + 1][m] - flux_nodes[i][m];
      if (diff != 0.0) lambda = std::min(lambda, std::abs(field.dx * h_nodes[m] / diff));
    }
  }
  return lambda;
}

double cfl_dt(const PceBasis& basis, const StageEvaluation& stage, double cfl, double dx, double g) {
  double max_speed = 0.0;
  for (std::size_t i = 0; i < stage.rhs.size(); ++i) {
    const CellData& c = stage.cell(i);
    try {
      max_speed = std::max(max_speed, characteristic_speeds(basis, c.state.h, c.u, g).cwiseAbs().maxCoeff());
    } catch (const SolverError& e) {
      throw e.at_cell(static_cast<long>(i));
    }
  }
  if (max_speed == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * dx / max_speed;
}

double cfl_dt(const PceBasis& basis, const Field& field, double cfl, double g) {
  double max_speed = 0.0;
  for (std::size_t i = 0; i < field.nx(); ++i) {
    try {
      const ResolvedCell rc = velocity(basis, field.cells[i], field.dx);
      max_speed = std::max(max_speed,
                           characteristic_speeds(basis, rc.state.h, rc.velocity.u, g).cwiseAbs().maxCoeff());
    } catch (const SolverError& e) {
      throw e.at_cell(static_cast<long>(i));
    }
  }
  if (max_speed == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * field.dx / max_speed;
}

PositivityReport positivity_check(const PceBasis& basis, const Field& field) {
  PositivityReport report;
  for (std::size_t i = 0; i < field.nx(); ++i) {
    const Vec h_nodes = basis.evaluate_at_nodes(field.cells[i].h);
    for (Eigen::Index m = 0; m < h_nodes.size(); ++m) {
      report.min_value = std::min(report.min_value, h_nodes[m]);
      if (report.ok && !(h_nodes[m] > 0.0)) {
        report.ok = false;
        report.cell = static_cast<long>(i);
        report.node = static_cast<long>(m);
      }
    }
  }
  return report;
}

StepOutcome ssp_rk3_step(const PceBasis& basis, Field& field, SchemeKind scheme, double g, TimeController& ctl,
                         double t_stop) {
  StepOutcome outcome;
  const double remaining = t_stop - ctl.t;
  if (!(remaining > 0.0)) return outcome;

  const StageEvaluation s0 = evaluate_stage(basis, field, scheme, g);
  const Field& u0 = field;
  ctl.lambda = positivity_lambda(basis, u0, s0.fluxes);
  outcome.cfl_bound = cfl_dt(basis, s0, ctl.cfl, field.dx, g);

  double dt = std::min(outcome.cfl_bound, ctl.safety * ctl.lambda);
  bool lands_on_stop = false;
  if (dt >= remaining) {
    dt = remaining;
    lands_on_stop = true;
  }

  const double underflow = 1e-14 * ctl.t_final;
  for (;;) {
    if (!(dt >= underflow)) {
      throw SolverError(FailureKind::StepUnderflow,
                        "time step underflow (dt = " + std::to_string(dt) + ", lambda = " +
                            std::to_string(ctl.lambda) + ")",
                        -1, ctl.t);
    }

    // A stage whose positivity bound is tighter than dt forces a restart.
    auto violates = [&](const Field& stage_field, const StageEvaluation& stage) {
      const double lam = positivity_lambda(basis, stage_field, stage.fluxes);
      if (dt > ctl.safety * lam) {
        ctl.lambda = lam;
        dt = ctl.safety * lam;
        lands_on_stop = false;
        ++ctl.restarts;
        ++outcome.restarts;
        return true;
      }
      return false;
    };

    Field u1 = combine(0.0, u0, 1.0, u0, dt, s0.rhs);
    const StageEvaluation s1 = evaluate_stage(basis, u1, scheme, g);
    if (violates(u1, s1)) continue;

    Field u2 = combine(0.75, u0, 0.25, u1, dt, s1.rhs);
    const StageEvaluation s2 = evaluate_stage(basis, u2, scheme, g);
    if (violates(u2, s2)) continue;

    Field u3 = combine(1.0 / 3.0, u0, 2.0 / 3.0, u2, dt, s2.rhs);
    require_finite(u3);

    field = std::move(u3);
    ctl.t = lands_on_stop ? t_stop : ctl.t + dt;
    outcome.dt = dt;
    outcome.lambda = ctl.lambda;
    return outcome;
  }
}

}  // namespace sgswe
