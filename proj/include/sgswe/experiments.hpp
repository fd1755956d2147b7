#pragma once

#include "sgswe/config.hpp"
#include "sgswe/pce.hpp"
#include "sgswe/swe_core.hpp"

namespace sgswe {

/// Surface w(x, xi), discharge q(x, xi) and bottom B(x, xi) of an initial state.
struct InitialData {
  RandomFieldFn surface;
  RandomFieldFn discharge;
  RandomFieldFn bottom;
};

InitialData initial_data(const SchemeConfig& cfg);

/// Bottom shapes shared by the presets and the custom experiment.
double stochastic_bump_bottom(double x, double xi);
double two_bump_bottom(double x);

/// Projects the initial data on the grid: h = P[w] - P[B] cell by cell.
/// Throws SolverError(Hyperbolicity) if a node height is not positive.
Field build_experiment(const SchemeConfig& cfg, const PceBasis& basis);

}  // namespace sgswe
