#pragma once

#include "sgswe/pce.hpp"
#include "sgswe/types.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace sgswe {

/// PCE coefficients of water height and discharge in one cell.
struct CellState {
  Vec h;
  Vec q;
};

enum class Boundary { Outflow, Periodic };

/// Cell averages on a uniform grid plus the time-independent bottom coefficients.
struct Field {
  std::vector<CellState> cells;
  std::vector<Vec> bottom;
  double dx = 0.0;
  double x_left = 0.0;
  Boundary boundary = Boundary::Outflow;

  std::size_t nx() const noexcept { return cells.size(); }
  double x_center(std::size_t i) const noexcept { return x_left + (static_cast<double>(i) + 0.5) * dx; }
};

/// Zero-initialized field of nx cells over [x_left, x_right].
Field make_field(std::size_t nx, double x_left, double x_right, std::size_t K, Boundary boundary);

struct Velocity {
  Vec u;
  bool desingularized = false;
};

/// Velocity together with the (possibly) corrected state.
struct ResolvedCell {
  Velocity velocity;
  CellState state;
};

/// u = Q diag(1/pi~) Q^T q with the regularized eigenvalues
/// pi~ = sqrt(pi^4 + max(pi^4, eps^4)) / (sqrt(2) pi). When any eigenvalue is
/// regularized, q is replaced by P(h) u. eps = 0 gives the exact inverse.
/// Throws SolverError(Hyperbolicity) if P(h) has a non-positive eigenvalue.
ResolvedCell velocity(const PceBasis& basis, const CellState& state, double eps);

/// Q diag(1/pi~) Q^T, the regularized inverse of P(h).
Mat regularized_inverse(const PceBasis& basis, const Vec& h, double eps);

/// (q ; P(q) P^{-1}(h) q + g/2 P(h) h)
Vec physical_flux(const PceBasis& basis, const CellState& state, double g, double eps = 0.0);

/// Block Jacobian [[0, I], [g P(h) - P(q) P^{-1}(h) P(u), P(q) P^{-1}(h) + P(u)]].
Mat flux_jacobian(const PceBasis& basis, const CellState& state, double g, double eps = 0.0);

/// Eigen-structure of the flux Jacobian at (h, P(h) u) built from the
/// symmetric form D = L diag(lambda) L^T and the scaling R, with T = R L.
struct RoeEigensystem {
  Mat T;
  Vec lambda;
  Mat R;
};

RoeEigensystem symmetrizer_eig(const PceBasis& basis, const Vec& h_bar, const Vec& u_bar, double g);

/// Eigenvalues of the flux Jacobian at (h, P(h) u), ascending.
Vec characteristic_speeds(const PceBasis& basis, const Vec& h, const Vec& u, double g);

using RandomFieldFn = std::function<double(double x, double xi)>;

/// Per-cell PCE coefficients of f(x_i, xi) sampled at cell midpoints.
std::vector<Vec> project_bottom(const RandomFieldFn& f, const PceBasis& basis, const Field& grid);

}  // namespace sgswe
