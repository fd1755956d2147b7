#include "sgswe/swe_core.hpp"

#include "sgswe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sgswe {

namespace {

void require_finite(const CellState& s) {
  if (!s.h.allFinite() || !s.q.allFinite()) {
    throw SolverError(FailureKind::BlowUp, "non-finite PCE coefficients in cell state");
  }
}

struct RegularizedSpectrum {
  Mat vectors;
  Vec inv_values;  // 1 / pi~
  bool regularized = false;
};

RegularizedSpectrum regularized_spectrum(const PceBasis& basis, const Vec& h, double eps) {
  const linalg::SymEig e = linalg::sym_eig(basis.p_operator(h));
  if (e.values[0] <= 0.0) {
    throw SolverError(FailureKind::Hyperbolicity,
                      "P(h) is not positive definite (smallest eigenvalue " + std::to_string(e.values[0]) + ")");
  }
  RegularizedSpectrum out{e.vectors, Vec(e.values.size()), false};
  const double eps4 = eps * eps * eps * eps;
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    const double pi = e.values[k];
    if (pi < eps) {
      const double pi4 = pi * pi * pi * pi;
      const double regularized = std::sqrt(pi4 + std::max(pi4, eps4)) / (std::sqrt(2.0) * pi);
      out.inv_values[k] = 1.0 / regularized;
      out.regularized = true;
    } else {
      out.inv_values[k] = 1.0 / pi;
    }
  }
  return out;
}

// Square root of g P(h) and its inverse from one eigendecomposition.
struct SqrtPair {
  Mat G;
  Mat G_inv;
};

SqrtPair sqrt_pair(const Mat& gPh) {
  const linalg::SymEig e = linalg::sym_eig(gPh);
  if (e.values[0] <= 0.0) {
    throw SolverError(FailureKind::Hyperbolicity,
                      "g P(h) is not positive definite (smallest eigenvalue " + std::to_string(e.values[0]) + ")");
  }
  const Vec s = e.values.cwiseSqrt();
  return {e.vectors * s.asDiagonal() * e.vectors.transpose(),
          e.vectors * s.cwiseInverse().asDiagonal() * e.vectors.transpose()};
}

struct SymmetricForm {
  Mat D;
  Mat G;
  Mat Pu;
};

SymmetricForm symmetric_form(const PceBasis& basis, const Vec& h, const Vec& u, double g) {
  const Mat Ph = basis.p_operator(h);
  const Mat Pu = basis.p_operator(u);
  const Mat Pq = basis.p_operator(Ph * u);
  const SqrtPair sp = sqrt_pair(g * Ph);
  const Mat X = g * sp.G_inv * Pq * sp.G_inv;

  const auto K = Ph.rows();
  Mat D(2 * K, 2 * K);
  D.topLeftCorner(K, K) = 0.5 * (2.0 * sp.G + Pu + X);
  D.topRightCorner(K, K) = 0.5 * (Pu - X);
  D.bottomLeftCorner(K, K) = 0.5 * (Pu - X);
  D.bottomRightCorner(K, K) = 0.5 * (Pu + X - 2.0 * sp.G);
  return {0.5 * (D + D.transpose()), sp.G, Pu};
}

}  // namespace

Field make_field(std::size_t nx, double x_left, double x_right, std::size_t K, Boundary boundary) {
  if (nx == 0) throw ConfigError("nx", "grid needs at least one cell");
  if (!(x_right > x_left)) throw ConfigError("domain", "x_right must exceed x_left");
  Field f;
  const auto Ki = static_cast<Eigen::Index>(K);
  f.cells.assign(nx, CellState{Vec::Zero(Ki), Vec::Zero(Ki)});
  f.bottom.assign(nx, Vec::Zero(Ki));
  f.dx = (x_right - x_left) / static_cast<double>(nx);
  f.x_left = x_left;
  f.boundary = boundary;
  return f;
}

ResolvedCell velocity(const PceBasis& basis, const CellState& state, double eps) {
  require_finite(state);
  const RegularizedSpectrum rs = regularized_spectrum(basis, state.h, eps);
  ResolvedCell out;
  out.velocity.u = rs.vectors * (rs.inv_values.asDiagonal() * (rs.vectors.transpose() * state.q));
  out.velocity.desingularized = rs.regularized;
  out.state.h = state.h;
  out.state.q = rs.regularized ? Vec(basis.p_operator(state.h) * out.velocity.u) : state.q;
  return out;
}

Mat regularized_inverse(const PceBasis& basis, const Vec& h, double eps) {
  const RegularizedSpectrum rs = regularized_spectrum(basis, h, eps);
  return rs.vectors * rs.inv_values.asDiagonal() * rs.vectors.transpose();
}

Vec physical_flux(const PceBasis& basis, const CellState& state, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  const auto K = state.h.size();
  Vec F(2 * K);
  F.head(K) = rc.state.q;
  F.tail(K) = basis.p_operator(rc.state.q) * rc.velocity.u + 0.5 * g * (basis.p_operator(state.h) * state.h);
  return F;
}

Mat flux_jacobian(const PceBasis& basis, const CellState& state, double g, double eps) {
  require_finite(state);
  const Mat Ph_inv = regularized_inverse(basis, state.h, eps);
  const Vec u = Ph_inv * state.q;
  const Mat Ph = basis.p_operator(state.h);
  const Mat Pq = basis.p_operator(state.q);
  const Mat Pu = basis.p_operator(u);
  const auto K = state.h.size();
  Mat J = Mat::Zero(2 * K, 2 * K);
  J.topRightCorner(K, K).setIdentity();
  J.bottomLeftCorner(K, K) = g * Ph - Pq * Ph_inv * Pu;
  J.bottomRightCorner(K, K) = Pq * Ph_inv + Pu;
  return J;
}

RoeEigensystem symmetrizer_eig(const PceBasis& basis, const Vec& h_bar, const Vec& u_bar, double g) {
  const SymmetricForm sf = symmetric_form(basis, h_bar, u_bar, g);
  const linalg::SymEig e = linalg::sym_eig(sf.D);

  const auto K = h_bar.size();
  Mat R(2 * K, 2 * K);
  R.topLeftCorner(K, K).setIdentity();
  R.topRightCorner(K, K).setIdentity();
  R.bottomLeftCorner(K, K) = sf.Pu + sf.G;
  R.bottomRightCorner(K, K) = sf.Pu - sf.G;
  R /= std::sqrt(2.0 * g);

  return {R * e.vectors, e.values, std::move(R)};
}

Vec characteristic_speeds(const PceBasis& basis, const Vec& h, const Vec& u, double g) {
  return linalg::sym_eigenvalues(symmetric_form(basis, h, u, g).D);
}

std::vector<Vec> project_bottom(const RandomFieldFn& f, const PceBasis& basis, const Field& grid) {
  std::vector<Vec> out;
  out.reserve(grid.nx());
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    const double x = grid.x_center(i);
    out.push_back(basis.project([&](double xi) { return f(x, xi); }));
  }
  return out;
}

}  // namespace sgswe
