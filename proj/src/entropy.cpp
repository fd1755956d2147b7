#include "sgswe/entropy.hpp"

#include "sgswe/linalg.hpp"

namespace sgswe {

double energy(const PceBasis&, const CellState& state, const Vec& u, const Vec& bottom, double g) {
  return 0.5 * (state.q.dot(u) + g * state.h.squaredNorm()) + g * state.h.dot(bottom);
}

double energy(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  return energy(basis, rc.state, rc.velocity.u, bottom, g);
}

double energy_flux(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g) {
  return 0.5 * u.dot(basis.p_operator(state.q) * u) + g * state.q.dot(state.h) + g * state.q.dot(bottom);
}

double energy_flux(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  return energy_flux(basis, rc.state, rc.velocity.u, bottom, g);
}

Vec entropy_variables(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g) {
  const auto K = state.h.size();
  Vec V(2 * K);
  V.head(K) = -0.5 * (basis.p_operator(u) * u) + g * (state.h + bottom);
  V.tail(K) = u;
  return V;
}

Vec entropy_variables(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  return entropy_variables(basis, rc.state, rc.velocity.u, bottom, g);
}

double energy_potential(const PceBasis& basis, const CellState& state, const Vec& u, double g) {
  return 0.5 * g * u.dot(basis.p_operator(state.h) * state.h);
}

double energy_potential(const PceBasis& basis, const CellState& state, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  return energy_potential(basis, rc.state, rc.velocity.u, g);
}

double hessian_quadform(const PceBasis& basis, const CellState& state, double g, const Vec& w1, const Vec& w2) {
  const Mat Ph = basis.p_operator(state.h);
  const Vec u = linalg::spd_solve(Ph, state.q);
  const Vec r = basis.p_operator(u) * w1 - w2;
  return g * w1.squaredNorm() + r.dot(linalg::spd_solve(Ph, r));
}

}  // namespace sgswe
