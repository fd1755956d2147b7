#pragma once

#include "sgswe/pce.hpp"
#include "sgswe/swe_core.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sgswe {

enum class SchemeKind { EC, ES1, ES2 };

std::string to_string(SchemeKind kind);
/// Accepts "EC", "ES1", "ES2" in any case; throws ConfigError otherwise.
SchemeKind parse_scheme(std::string_view name);

/// Interface average (a_l + a_r)/2 and jump a_r - a_l.
struct InterfacePair {
  Vec avg;
  Vec jump;

  static InterfacePair of(const Vec& left, const Vec& right) {
    return {0.5 * (left + right), right - left};
  }
};

/// Everything the interface formulas need from one cell, computed once per stage.
struct CellData {
  CellState state;  // q already corrected by desingularization
  Vec u;
  Vec bottom;
  Vec V;       // entropy variables, bottom term included
  double psi;  // energy potential
  Vec Ph_h;    // P(h) h
};

CellData prepare_cell(const PceBasis& basis, const CellState& state, const Vec& u, const Vec& bottom, double g);

/// Resolves the velocity with desingularization parameter eps and prepares the cell.
CellData prepare_cell(const PceBasis& basis, const CellState& state, const Vec& bottom, double g, double eps);

/// Energy conservative flux
/// (P(h_avg) u_avg ; g/2 avg(P(h) h) + P(u_avg) P(h_avg) u_avg).
Vec ec_flux(const PceBasis& basis, const CellData& left, const CellData& right, double g);

/// Well-balanced source of the centre cell:
/// (0 ; -g/(2dx) (P(h_avg+)[[B]]+ + P(h_avg-)[[B]]-)).
Vec ec_source(const PceBasis& basis, const CellData& left, const CellData& center, const CellData& right, double g,
              double dx);

/// Roe-type entropy diffusion T |Lambda| T^T [[V]] at the interface state
/// (h_avg, P(h_avg) u_avg).
Vec es1_diffusion(const RoeEigensystem& eig, const Vec& jump_V);

/// ES1 flux: ec_flux - 1/2 T |Lambda| T^T [[V]].
Vec es1_flux(const PceBasis& basis, const CellData& left, const CellData& right, double g);

double minmod_phi(double theta);

/// Diagonal of Pi for the interface between stencil[1] and stencil[2]:
/// 1 - phi(theta^-)/2 - phi(theta^+)/2, where the theta are componentwise ratios of
/// the neighbouring entropy-variable jumps to the central jump, all expressed in
/// the scaled variables T^T V of this interface.
Vec es2_limiter(const RoeEigensystem& eig, const std::array<const CellData*, 4>& stencil);

/// T |Lambda| Pi T^T [[V]], the second-order diffusion.
Vec es2_diffusion(const RoeEigensystem& eig, const std::array<const CellData*, 4>& stencil);

/// ES2 flux across stencil[1] | stencil[2]: ec_flux - 1/2 es2_diffusion.
Vec es2_flux(const PceBasis& basis, const std::array<const CellData*, 4>& stencil, double g);

/// H = V_avg^T flux - Psi_avg - g/4 [[B]]^T P(h_avg) [[u]]. Passing an ES flux
/// yields the matching ES energy flux.
double numerical_energy_flux(const PceBasis& basis, const CellData& left, const CellData& right, const Vec& flux,
                             double g);

/// One evaluation of the semi-discrete operator.
struct StageEvaluation {
  std::vector<CellData> cells;  // nx + 4 entries, two ghost layers on each side
  std::vector<Vec> fluxes;      // nx + 1 entries, fluxes[i] sits at x_{i-1/2}
  std::vector<Vec> rhs;         // nx entries
  bool desingularized = false;  // any cell regularized

  static constexpr std::size_t ghosts = 2;
  const CellData& cell(std::size_t i) const { return cells[i + ghosts]; }
};

/// Resolves velocities (writing the corrected discharge back into `field`),
/// fills ghost cells, and assembles rhs_i = -(F_{i+1/2} - F_{i-1/2})/dx + S_i.
/// The desingularization threshold is eps = dx.
StageEvaluation evaluate_stage(const PceBasis& basis, Field& field, SchemeKind scheme, double g);

/// Same as evaluate_stage on a copy of the field.
StageEvaluation semidiscrete_rhs(const PceBasis& basis, const Field& field, SchemeKind scheme, double g);

struct EnergyBalance {
  double residual;  // V_i^T rhs_i + (H_{i+1/2} - H_{i-1/2}) / dx
  double scale;     // size of the energy exchanged through the cell:
                    // |V_i^T rhs_i| + (|H_{i+1/2}| + |H_{i-1/2}|) / dx
                    // + |V_i| ((|F_{i+1/2}| + |F_{i-1/2}|) / dx + |S_i|)
};

/// Cell-wise energy balance with H evaluated from the stage's own fluxes.
/// The residual vanishes for EC and is non-positive for ES1/ES2.
std::vector<EnergyBalance> energy_balance(const PceBasis& basis, const StageEvaluation& stage, double g, double dx);

}  // namespace sgswe
