#include "sgswe/output.hpp"

#include "sgswe/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sgswe {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

}  // namespace

double total_energy(const PceBasis& basis, const Field& field, double g) {
  double E = 0.0;
  for (std::size_t i = 0; i < field.nx(); ++i) {
    E += field.dx * energy(basis, field.cells[i], field.bottom[i], g, field.dx);
  }
  return E;
}

double min_node_height(const PceBasis& basis, const Field& field) {
  double m = std::numeric_limits<double>::infinity();
  for (const CellState& c : field.cells) m = std::min(m, basis.evaluate_at_nodes(c.h).minCoeff());
  return m;
}

DiagnosticsRecord make_record(const PceBasis& basis, const Field& field, double g, double t, long restarts,
                              double E0) {
  DiagnosticsRecord r;
  r.t = t;
  r.E_total = total_energy(basis, field, g);
  r.relative_energy = (r.E_total - E0) / r.E_total;
  r.relative_energy_e0 = (r.E_total - E0) / E0;
  r.min_node_height = min_node_height(basis, field);
  r.restarts = restarts;
  return r;
}

double surrogate_quantile(const PceBasis& basis, const Vec& coeffs, double p, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xi = n == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(n - 1);
    v[j] = basis.polynomials_at(xi).dot(coeffs);
  }
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, n - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<SnapshotRow> snapshot_rows(const PceBasis& basis, const Field& field) {
  std::vector<SnapshotRow> rows(field.nx());
  for (std::size_t i = 0; i < field.nx(); ++i) {
    const Vec w = field.cells[i].h + field.bottom[i];
    const Vec& q = field.cells[i].q;
    const Moments mw = mean_variance(w), mq = mean_variance(q), mb = mean_variance(field.bottom[i]);
    rows[i] = {field.x_center(i),
               mw.mean,
               std::sqrt(mw.variance),
               surrogate_quantile(basis, w, 0.005),
               surrogate_quantile(basis, w, 0.995),
               mq.mean,
               std::sqrt(mq.variance),
               surrogate_quantile(basis, q, 0.005),
               surrogate_quantile(basis, q, 0.995),
               mb.mean,
               std::sqrt(mb.variance)};
  }
  return rows;
}

void write_snapshot(std::ostream& out, const PceBasis& basis, const Field& field) {
  out << "x_center,w_mean,w_std,w_q005,w_q995,q_mean,q_std,q_q005,q_q995,B_mean,B_std\n";
  for (const SnapshotRow& r : snapshot_rows(basis, field)) {
    out << num(r.x) << ',' << num(r.w_mean) << ',' << num(r.w_std) << ',' << num(r.w_q005) << ','
        << num(r.w_q995) << ',' << num(r.q_mean) << ',' << num(r.q_std) << ',' << num(r.q_q005) << ','
        << num(r.q_q995) << ',' << num(r.B_mean) << ',' << num(r.B_std) << '\n';
  }
}

void write_snapshot(const std::string& path, const PceBasis& basis, const Field& field) {
  std::ofstream f = open_or_throw(path);
  write_snapshot(f, basis, field);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void write_energy_series(std::ostream& out, const std::vector<DiagnosticsRecord>& records, bool with_e0) {
  out << "t,E_total,relative_energy,min_node_height,restarts";
  if (with_e0) out << ",relative_energy_e0";
  out << '\n';
  for (const DiagnosticsRecord& r : records) {
    out << num(r.t) << ',' << num(r.E_total) << ',' << num(r.relative_energy) << ',' << num(r.min_node_height)
        << ',' << r.restarts;
    if (with_e0) out << ',' << num(r.relative_energy_e0);
    out << '\n';
  }
}

void write_energy_series(const std::string& path, const std::vector<DiagnosticsRecord>& records, bool with_e0) {
  std::ofstream f = open_or_throw(path);
  write_energy_series(f, records, with_e0);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_t%.6g.csv", t);
  return buf;
}

}  // namespace sgswe
