#pragma once

#include "sgswe/pce.hpp"
#include "sgswe/swe_core.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace sgswe {

struct DiagnosticsRecord {
  double t = 0.0;
  double E_total = 0.0;
  double relative_energy = 0.0;     // (E(t) - E(0)) / E(t)
  double relative_energy_e0 = 0.0;  // (E(t) - E(0)) / E(0)
  double min_node_height = 0.0;
  long restarts = 0;
};

/// sum_i dx E_i with the desingularized velocity (eps = dx).
double total_energy(const PceBasis& basis, const Field& field, double g);

/// min over cells and nodes of h_i(xi_m).
double min_node_height(const PceBasis& basis, const Field& field);

DiagnosticsRecord make_record(const PceBasis& basis, const Field& field, double g, double t, long restarts,
                              double E0);

/// Empirical p-quantile of the surrogate on n equispaced xi in [-1, 1],
/// linear interpolation between order statistics.
double surrogate_quantile(const PceBasis& basis, const Vec& coeffs, double p, std::size_t n = 1001);

struct SnapshotRow {
  double x, w_mean, w_std, w_q005, w_q995, q_mean, q_std, q_q005, q_q995, B_mean, B_std;
};

std::vector<SnapshotRow> snapshot_rows(const PceBasis& basis, const Field& field);

void write_snapshot(std::ostream& out, const PceBasis& basis, const Field& field);
void write_snapshot(const std::string& path, const PceBasis& basis, const Field& field);

void write_energy_series(std::ostream& out, const std::vector<DiagnosticsRecord>& records, bool with_e0 = false);
void write_energy_series(const std::string& path, const std::vector<DiagnosticsRecord>& records,
                         bool with_e0 = false);

/// "snapshot_t0.0995.csv"
std::string snapshot_name(double t);

}  // namespace sgswe
