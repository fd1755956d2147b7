#pragma once

#include "sgswe/schemes.hpp"
#include "sgswe/swe_core.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sgswe {

enum class Experiment { DamBreakFlat, StochasticBottom, LakeAtRestPerturbation, SmoothWave, Custom };

std::string to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

enum class BottomShape { Flat, StochasticBump, TwoBump };

/// Piecewise-constant Riemann data for the custom experiment:
/// w = w_left + w_left_xi * xi for x < split, right values otherwise.
struct CustomData {
  double split = 0.0;
  double w_left = 1.0;
  double w_right = 1.0;
  double w_left_xi = 0.0;
  double w_right_xi = 0.0;
  double q_left = 0.0;
  double q_right = 0.0;
  BottomShape bottom = BottomShape::Flat;
};

struct SchemeConfig {
  Experiment experiment = Experiment::DamBreakFlat;
  SchemeKind scheme = SchemeKind::ES2;
  std::size_t K = 9;
  std::size_t nx = 400;
  double x_left = -1.0;
  double x_right = 1.0;
  double g = 1.0;
  double cfl = 0.45;
  double t_final = 0.4;
  std::vector<double> snapshot_times;  // empty means {t_final}
  bool preset_snapshots = false;       // preset list, trimmed to t_final instead of rejected
  Boundary boundary = Boundary::Outflow;
  std::string output_dir = "out";
  double perturbation_amplitude = 0.001;
  CustomData custom;
};

/// Preset grid, domain and horizon of an experiment.
SchemeConfig defaults_for(Experiment e);

/// Parses flat `key = value` text. '#' starts a comment. The experiment key is
/// applied first so its defaults can be overridden by the other keys.
SchemeConfig parse_config(std::string_view text);
SchemeConfig load_config(const std::string& path);

/// Sets one key from its textual value; throws ConfigError on unknown keys or bad values.
void apply_setting(SchemeConfig& cfg, const std::string& key, const std::string& value);

/// Checks the invariants and fills in the snapshot list. Throws ConfigError.
void validate(SchemeConfig& cfg);

}  // namespace sgswe
