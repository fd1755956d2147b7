#pragma once

#include "sgswe/pce.hpp"
#include "sgswe/swe_core.hpp"

namespace sgswe {

// Stochastic total energy and its companions. The primary overloads take the
// velocity coefficients `u` explicitly (as computed once per stage by the
// time stepper); the `eps` overloads resolve u through the desingularized
// inverse first. `bottom` holds the cell's bottom PCE coefficients.

/// E = 1/2 (q.u + g |h|^2) + g h.B
double energy(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g);
double energy(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps);

/// H = 1/2 u^T P(q) u + g q.h + g q.B
double energy_flux(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g);
double energy_flux(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps);

/// V = (-1/2 P(u) u + g (h + B) ; u)
Vec entropy_variables(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g);
Vec entropy_variables(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps);

/// Psi = g/2 u^T P(h) h
double energy_potential(const PceBasis& basis, const CellState& state, const Vec& u, double g);
double energy_potential(const PceBasis& basis, const CellState& state, double g, double eps);

/// (w1, w2)^T Hess(E) (w1, w2) = g |w1|^2 + r^T P(h)^{-1} r with r = P(u) w1 - w2,
/// using the exact inverse of P(h).
double hessian_quadform(const PceBasis& basis, const CellState& state, double g, const Vec& w1, const Vec& w2);

}  // namespace sgswe
