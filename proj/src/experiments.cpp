#include "sgswe/experiments.hpp"

#include "sgswe/timestep.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sgswe {

using std::numbers::pi;

double stochastic_bump_bottom(double x, double xi) {
  if (std::abs(x) < 0.2) return 0.125 * (std::cos(5.0 * pi * x) + 2.0) + 0.125 * xi;
  return 0.125 + 0.125 * xi;
}

double two_bump_bottom(double x) {
  if (x > -0.55 && x < -0.15) return 0.25 * (std::cos(5.0 * pi * (x + 0.35)) + 1.0);
  if (x > 0.25 && x < 0.45) return 0.125 * (std::cos(10.0 * pi * (x - 0.35)) + 1.0);
  return 0.0;
}

InitialData initial_data(const SchemeConfig& cfg) {
  const RandomFieldFn zero = [](double, double) { return 0.0; };
  switch (cfg.experiment) {
    case Experiment::DamBreakFlat:
      return {[](double x, double xi) { return (x < 0.0 ? 2.0 : 1.5) + 0.1 * xi; }, zero, zero};
    case Experiment::StochasticBottom:
      return {[](double x, double) { return x < 0.0 ? 1.0 : 0.5; }, zero, stochastic_bump_bottom};
    case Experiment::LakeAtRestPerturbation: {
      const double a = cfg.perturbation_amplitude;
      return {[a](double x, double xi) { return std::abs(x) <= 0.05 ? 1.0 + a * (xi + 1.0) : 1.0; }, zero,
              [](double x, double) { return two_bump_bottom(x); }};
    }
    case Experiment::SmoothWave:
      return {[](double x, double xi) { return 1.0 + 0.1 * std::sin(2.0 * pi * x) * (1.0 + 0.05 * xi); }, zero,
              zero};
    case Experiment::Custom: {
      const CustomData d = cfg.custom;
      RandomFieldFn bottom = zero;
      if (d.bottom == BottomShape::StochasticBump) bottom = stochastic_bump_bottom;
      if (d.bottom == BottomShape::TwoBump) bottom = [](double x, double) { return two_bump_bottom(x); };
      return {[d](double x, double xi) { return x < d.split ? d.w_left + d.w_left_xi * xi : d.w_right + d.w_right_xi * xi; },
              [d](double x, double) { return x < d.split ? d.q_left : d.q_right; }, bottom};
    }
  }
  return {zero, zero, zero};
}

Field build_experiment(const SchemeConfig& cfg, const PceBasis& basis) {
  Field field = make_field(cfg.nx, cfg.x_left, cfg.x_right, basis.size(), cfg.boundary);
  const InitialData data = initial_data(cfg);
  const std::vector<Vec> w = project_bottom(data.surface, basis, field);
  const std::vector<Vec> q = project_bottom(data.discharge, basis, field);
  field.bottom = project_bottom(data.bottom, basis, field);
  for (std::size_t i = 0; i < field.nx(); ++i) {
    field.cells[i].h = w[i] - field.bottom[i];
    field.cells[i].q = q[i];
  }
  const PositivityReport p = positivity_check(basis, field);
  if (!p.ok) {
    throw SolverError(FailureKind::Hyperbolicity,
                      "initial water height non-positive at quadrature node " + std::to_string(p.node), p.cell,
                      0.0);
  }
  return field;
}

}  // namespace sgswe
