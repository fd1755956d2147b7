#pragma once

#include "sgswe/config.hpp"
#include "sgswe/output.hpp"
#include "sgswe/pce.hpp"
#include "sgswe/swe_core.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace sgswe {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfig = 2,
  kExitPositivity = 3,
  kExitBlowUp = 4,
  kExitUnderflow = 5,
};

int exit_code_for(FailureKind kind);

struct RunOptions {
  bool write_files = true;
  bool check = false;          // evaluate the energy balance and positivity after every step
  bool debug_energy = false;   // extra relative-energy column against E(0)
  std::ostream* log = nullptr;
  // called after every accepted step (and once with the initial field)
  std::function<void(const PceBasis&, const Field&, double t)> on_step;
};

struct CheckSummary {
  long steps_checked = 0;
  long energy_violations = 0;
  long positivity_violations = 0;
  double worst_residual_ratio = 0.0;  // max residual / scale (signed for ES, absolute for EC)
};

struct RunResult {
  int exit_code = kExitOk;
  std::string message;
  double t = 0.0;
  long steps = 0;
  long restarts = 0;
  Field field;
  std::vector<DiagnosticsRecord> records;
  CheckSummary check;
};

/// Integrates the configured experiment to t_final, landing on every snapshot
/// time. Solver failures are reported through exit_code and message.
RunResult run(const SchemeConfig& cfg, const RunOptions& opts = {});

}  // namespace sgswe
