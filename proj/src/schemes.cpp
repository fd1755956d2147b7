#include "sgswe/schemes.hpp"

#include "sgswe/entropy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace sgswe {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::EC: return "EC";
    case SchemeKind::ES1: return "ES1";
    case SchemeKind::ES2: return "ES2";
  }
  return "?";
}

SchemeKind parse_scheme(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "EC") return SchemeKind::EC;
  if (upper == "ES1") return SchemeKind::ES1;
  if (upper == "ES2") return SchemeKind::ES2;
  throw ConfigError("scheme", "unknown scheme '" + std::string(name) + "' (expected EC, ES1 or ES2)");
}

CellData prepare_cell(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g) {
  CellData c{state, u, bottom, entropy_variables(basis, state, u, bottom, g), 0.0, Vec()};
  c.Ph_h = basis.p_operator(state.h) * state.h;
  c.psi = 0.5 * g * u.dot(c.Ph_h);
  return c;
}

CellData prepare_cell(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps) {
  const ResolvedCell rc = velocity(basis, state, eps);
  return prepare_cell(basis, rc.state, rc.velocity.u, bottom, g);
}

Vec ec_flux(const PceBasis& basis, const CellData& left, const CellData& right, double g) {
  const Vec h_bar = 0.5 * (left.state.h + right.state.h);
  const Vec u_bar = 0.5 * (left.u + right.u);
  const Vec mass = basis.p_operator(h_bar) * u_bar;
  const auto K = h_bar.size();
  Vec F(2 * K);
  F.head(K) = mass;
  F.tail(K) = 0.25 * g * (left.Ph_h + right.Ph_h) + basis.p_operator(u_bar) * mass;
  return F;
}

Vec ec_source(const PceBasis& basis, const CellData& left, const CellData& center, const CellData& right, double g,
              double dx) {
  const Vec h_plus = 0.5 * (center.state.h + right.state.h);
  const Vec h_minus = 0.5 * (left.state.h + center.state.h);
  const Vec jump_plus = right.bottom - center.bottom;
  const Vec jump_minus = center.bottom - left.bottom;
  const auto K = h_plus.size();
  Vec S = Vec::Zero(2 * K);
  S.tail(K) = -(g / (2.0 * dx)) * (basis.p_operator(h_plus) * jump_plus + basis.p_operator(h_minus) * jump_minus);
  return S;
}

namespace {

RoeEigensystem interface_eigensystem(const PceBasis& basis, const CellData& left, const CellData& right, double g) {
  return symmetrizer_eig(basis, 0.5 * (left.state.h + right.state.h), 0.5 * (left.u + right.u), g);
}

}  // namespace

Vec es1_diffusion(const RoeEigensystem& eig, const Vec& jump_V) {
  return eig.T * (eig.lambda.cwiseAbs().asDiagonal() * (eig.T.transpose() * jump_V));
}

Vec es1_flux(const PceBasis& basis, const CellData& left, const CellData& right, double g) {
  const RoeEigensystem eig = interface_eigensystem(basis, left, right, g);
  return ec_flux(basis, left, right, g) - 0.5 * es1_diffusion(eig, right.V - left.V);
}

double minmod_phi(double theta) {
  if (!(theta >= 0.0)) return 0.0;  // negative or NaN
  return std::min(theta, 1.0);
}

Vec es2_limiter(const RoeEigensystem& eig, const std::array<const CellData*, 4>& s) {
  const Mat Tt = eig.T.transpose();
  const Vec w_left = Tt * (s[1]->V - s[0]->V);
  const Vec w_mid = Tt * (s[2]->V - s[1]->V);
  const Vec w_right = Tt * (s[3]->V - s[2]->V);
  const double scale =
      std::max({(Tt * s[1]->V).cwiseAbs().maxCoeff(), (Tt * s[2]->V).cwiseAbs().maxCoeff(), 1e-300});

  Vec pi(w_mid.size());
  for (Eigen::Index l = 0; l < w_mid.size(); ++l) {
    if (std::abs(w_mid[l]) < 1e-14 * scale) {
      pi[l] = 1.0;
      continue;
    }
    const double theta_plus = w_left[l] / w_mid[l];    // reconstruction of cell i towards i+1/2
    const double theta_minus = w_right[l] / w_mid[l];  // reconstruction of cell i+1 towards i+1/2
    pi[l] = 1.0 - 0.5 * minmod_phi(theta_minus) - 0.5 * minmod_phi(theta_plus);
  }
  return pi;
}

Vec es2_diffusion(const RoeEigensystem& eig, const std::array<const CellData*, 4>& s) {
  const Vec pi = es2_limiter(eig, s);
  const Vec w_mid = eig.T.transpose() * (s[2]->V - s[1]->V);
  return eig.T * eig.lambda.cwiseAbs().cwiseProduct(pi).cwiseProduct(w_mid);
}

Vec es2_flux(const PceBasis& basis, const std::array<const CellData*, 4>& s, double g) {
  const RoeEigensystem eig = interface_eigensystem(basis, *s[1], *s[2], g);
  return ec_flux(basis, *s[1], *s[2], g) - 0.5 * es2_diffusion(eig, s);
}

double numerical_energy_flux(const PceBasis& basis, const CellData& left, const CellData& right, const Vec& flux,
                             double g) {
  const Vec V_bar = 0.5 * (left.V + right.V);
  const double psi_bar = 0.5 * (left.psi + right.psi);
  const Vec h_bar = 0.5 * (left.state.h + right.state.h);
  const Vec jump_B = right.bottom - left.bottom;
  const Vec jump_u = right.u - left.u;
  return V_bar.dot(flux) - psi_bar - 0.25 * g * jump_B.dot(basis.p_operator(h_bar) * jump_u);
}

StageEvaluation evaluate_stage(const PceBasis& basis, Field& field, SchemeKind scheme, double g) {
  const std::size_t nx = field.nx();
  const std::size_t G = StageEvaluation::ghosts;
  if (nx < 2) throw ConfigError("nx", "the finite volume stencil needs at least two cells");

  StageEvaluation out;
  out.cells.resize(nx + 2 * G);
  for (std::size_t i = 0; i < nx; ++i) {
    try {
      const ResolvedCell rc = velocity(basis, field.cells[i], field.dx);
      if (rc.velocity.desingularized) {
        field.cells[i].q = rc.state.q;
        out.desingularized = true;
      }
      out.cells[i + G] = prepare_cell(basis, rc.state, rc.velocity.u, field.bottom[i], g);
    } catch (const SolverError& e) {
      throw e.at_cell(static_cast<long>(i));
    }
  }
  for (std::size_t k = 0; k < G; ++k) {
    if (field.boundary == Boundary::Periodic) {
      out.cells[k] = out.cells[nx + k];
      out.cells[nx + G + k] = out.cells[G + k];
    } else {
      out.cells[k] = out.cells[G];
      out.cells[nx + G + k] = out.cells[nx + G - 1];
    }
  }

  out.fluxes.resize(nx + 1);
  for (std::size_t f = 0; f <= nx; ++f) {
    const CellData& left = out.cells[f + G - 1];
    const CellData& right = out.cells[f + G];
    try {
      switch (scheme) {
        case SchemeKind::EC:
          out.fluxes[f] = ec_flux(basis, left, right, g);
          break;
        case SchemeKind::ES1:
          out.fluxes[f] = es1_flux(basis, left, right, g);
          break;
        case SchemeKind::ES2:
          out.fluxes[f] = es2_flux(basis, {&out.cells[f + G - 2], &left, &right, &out.cells[f + G + 1]}, g);
          break;
      }
    } catch (const SolverError& e) {
      throw e.at_cell(static_cast<long>(f));
    }
  }

  out.rhs.resize(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    out.rhs[i] = -(out.fluxes[i + 1] - out.fluxes[i]) / field.dx +
                 ec_source(basis, out.cells[i + G - 1], out.cells[i + G], out.cells[i + G + 1], g, field.dx);
  }
  return out;
}

StageEvaluation semidiscrete_rhs(const PceBasis& basis, const Field& field, SchemeKind scheme, double g) {
  Field copy = field;
  return evaluate_stage(basis, copy, scheme, g);
}

std::vector<EnergyBalance> energy_balance(const PceBasis& basis, const StageEvaluation& stage, double g, double dx) {
  const std::size_t nx = stage.rhs.size();
  const std::size_t G = StageEvaluation::ghosts;
  std::vector<double> H(nx + 1);
  for (std::size_t f = 0; f <= nx; ++f) {
    H[f] = numerical_energy_flux(basis, stage.cells[f + G - 1], stage.cells[f + G], stage.fluxes[f], g);
  }
  std::vector<EnergyBalance> out(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    const CellData& c = stage.cell(i);
    const double dEdt = c.V.dot(stage.rhs[i]);
    const double V_norm = c.V.norm();
    const Vec S = stage.rhs[i] + (stage.fluxes[i + 1] - stage.fluxes[i]) / dx;
    out[i].residual = dEdt + (H[i + 1] - H[i]) / dx;
    out[i].scale = std::abs(dEdt) + (std::abs(H[i + 1]) + std::abs(H[i])) / dx +
                   V_norm * ((stage.fluxes[i + 1].norm() + stage.fluxes[i].norm()) / dx + S.norm());
  }
  return out;
}

}  // namespace sgswe
