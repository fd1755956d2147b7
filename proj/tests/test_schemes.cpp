#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace sgswe;
using namespace sgswe::testing;

namespace {

constexpr double g = 1.0;

std::array<const CellData*, 4> same(const CellData& c) { return {&c, &c, &c, &c}; }

// Stochastic lake at rest: h + B = C(xi) in every cell, q = 0.
Field lake_at_rest(const PceBasis& b, std::size_t nx, Boundary bc) {
  const std::size_t K = b.size();
  Field f = make_field(nx, -1.0, 1.0, K, bc);
  Vec C = 0.3 * random_height(K);
  C[0] = 3.0;
  for (std::size_t i = 0; i < nx; ++i) {
    f.bottom[i] = 0.5 * random_height(K);
    f.cells[i].h = C - f.bottom[i];
    f.cells[i].q = Vec::Zero(K);
  }
  return f;
}

Field random_field(const PceBasis& b, std::size_t nx, Boundary bc) {
  Field f = make_field(nx, 0.0, 1.0, b.size(), bc);
  for (std::size_t i = 0; i < nx; ++i) {
    const RandomCell c = random_cell(b);
    f.cells[i] = c.state;
    f.bottom[i] = c.bottom;
  }
  return f;
}

}  // namespace

TEST_SUITE("schemes") {
  TEST_CASE("minmod limiter") {
    CHECK(minmod_phi(-0.5) == 0.0);
    CHECK(minmod_phi(0.5) == 0.5);
    CHECK(minmod_phi(3.0) == 1.0);
    CHECK(minmod_phi(0.0) == 0.0);
    CHECK(minmod_phi(1.0) == 1.0);
    CHECK(minmod_phi(std::nan("")) == 0.0);
  }

  TEST_CASE("scheme names") {
    CHECK(parse_scheme("es2") == SchemeKind::ES2);
    CHECK(parse_scheme("EC") == SchemeKind::EC);
    CHECK(to_string(SchemeKind::ES1) == "ES1");
    CHECK_THROWS_AS(parse_scheme("roe"), ConfigError);
  }

  TEST_CASE("jump and average algebra") {
    const PceBasis b = build_basis(6);
    for (int trial = 0; trial < 50; ++trial) {
      const RandomCell L = random_cell(b), R = random_cell(b);
      const InterfacePair h = InterfacePair::of(L.state.h, R.state.h);
      CHECK(rel_err(h.avg - 0.5 * h.jump, L.state.h) <= 1e-15);
      CHECK(rel_err(h.avg + 0.5 * h.jump, R.state.h) <= 1e-15);
      CHECK(rel_err(b.p_operator(h.avg) * h.jump,
                    0.5 * (b.p_operator(R.state.h) * R.state.h - b.p_operator(L.state.h) * L.state.h)) <= 1e-13);
      const InterfacePair u = InterfacePair::of(L.u, R.u);
      const double lhs = h.jump.dot(u.avg) + u.jump.dot(h.avg);
      CHECK(std::abs(lhs - (R.state.h.dot(R.u) - L.state.h.dot(L.u))) <= 1e-13);
      CHECK(rel_err(b.p_operator(u.avg) * h.jump + b.p_operator(h.avg) * u.jump, R.state.q - L.state.q) <= 1e-12);
    }
  }

  TEST_CASE("consistency of all fluxes") {
    const PceBasis b = build_basis(9);
    for (int trial = 0; trial < 30; ++trial) {
      const CellData c = to_data(b, random_cell(b), g);
      const Vec F = physical_flux(b, c.state, g);
      CHECK(rel_err(ec_flux(b, c, c, g), F) <= 1e-12);
      CHECK(rel_err(es1_flux(b, c, c, g), F) <= 1e-12);
      CHECK(rel_err(es2_flux(b, same(c), g), F) <= 1e-12);
      CHECK(es2_diffusion(symmetrizer_eig(b, c.state.h, c.u, g), same(c)).isZero(0.0));
      // energy flux collapses to the exact one
      CHECK(numerical_energy_flux(b, c, c, F, g) ==
            doctest::Approx(energy_flux(b, c.state, c.u, c.bottom, g)).epsilon(1e-11));
    }
  }

  TEST_CASE("EC condition on random interfaces") {
    const PceBasis b = build_basis(9);
    for (int trial = 0; trial < 200; ++trial) {
      const CellData L = to_data(b, random_cell(b), g), R = to_data(b, random_cell(b), g);
      const Vec F = ec_flux(b, L, R, g);
      const Vec h_bar = 0.5 * (L.state.h + R.state.h), u_bar = 0.5 * (L.u + R.u);
      const double res = (R.V - L.V).dot(F) - (R.psi - L.psi) -
                         g * (R.bottom - L.bottom).dot(b.p_operator(h_bar) * u_bar);
      CHECK(std::abs(res) <= 1e-11);
    }
  }

  TEST_CASE("lake at rest interfaces") {
    const PceBasis b = build_basis(9);
    const Field f = lake_at_rest(b, 4, Boundary::Outflow);
    std::vector<CellData> c;
    for (std::size_t i = 0; i < 4; ++i) c.push_back(prepare_cell(b, f.cells[i], f.bottom[i], g, f.dx));
    CHECK(ec_flux(b, c[1], c[2], g).head(9).isZero(0.0));
    CHECK(rel_err(es1_flux(b, c[1], c[2], g), ec_flux(b, c[1], c[2], g)) <= 1e-14);
    CHECK(rel_err(es2_flux(b, {&c[0], &c[1], &c[2], &c[3]}, g), ec_flux(b, c[1], c[2], g)) <= 1e-14);
    CHECK(numerical_energy_flux(b, c[1], c[2], ec_flux(b, c[1], c[2], g), g) == 0.0);
  }

  TEST_CASE("well-balanced source") {
    const PceBasis b = build_basis(5);
    // flat bottom
    RandomCell a = random_cell(b), m = random_cell(b), z = random_cell(b);
    a.bottom = m.bottom = z.bottom = random_vec(5);
    CHECK(ec_source(b, to_data(b, a, g), to_data(b, m, g), to_data(b, z, g), g, 0.1).isZero(0.0));

    // deterministic linear bottom under constant depth: -g h B_x
    const PceBasis b1 = build_basis(1);
    const double h0 = 1.4, slope = 0.3, dx = 0.05;
    std::vector<CellData> cells;
    for (int i = 0; i < 3; ++i) {
      cells.push_back(prepare_cell(b1, {Vec::Constant(1, h0), Vec::Zero(1)}, Vec::Zero(1),
                                   Vec::Constant(1, slope * i * dx), g));
    }
    const Vec S = ec_source(b1, cells[0], cells[1], cells[2], g, dx);
    CHECK(S[0] == 0.0);
    CHECK(S[1] == doctest::Approx(-g * h0 * slope).epsilon(1e-12));
  }

  TEST_CASE("lake at rest is a discrete steady state") {
    const PceBasis b = build_basis(9);
    for (Boundary bc : {Boundary::Outflow, Boundary::Periodic}) {
      const Field f = lake_at_rest(b, 12, bc);
      for (SchemeKind s : {SchemeKind::EC, SchemeKind::ES1, SchemeKind::ES2}) {
        const StageEvaluation st = semidiscrete_rhs(b, f, s, g);
        for (std::size_t i = 0; i < f.nx(); ++i) {
          CHECK(st.rhs[i].cwiseAbs().maxCoeff() <= 1e-12 * g * f.cells[i].h.norm());
        }
      }
    }
  }

  TEST_CASE("constant flat state has zero residual") {
    const PceBasis b = build_basis(5);
    Field f = make_field(10, 0.0, 1.0, 5, Boundary::Outflow);
    const RandomCell c = random_cell(b);
    for (auto& cell : f.cells) cell = c.state;
    for (SchemeKind s : {SchemeKind::EC, SchemeKind::ES1, SchemeKind::ES2}) {
      const StageEvaluation st = semidiscrete_rhs(b, f, s, g);
      for (const Vec& r : st.rhs) CHECK(r.cwiseAbs().maxCoeff() <= 1e-13);
    }
  }

  TEST_CASE("periodic mass conservation") {
    for (std::size_t K : {1u, 5u}) {
      const PceBasis b = build_basis(K);
      Field f = make_field(16, -1.0, 1.0, K, Boundary::Periodic);
      for (std::size_t i = 0; i < f.nx(); ++i) {
        f.cells[i].h = Vec::Zero(K);
        f.cells[i].h[0] = f.x_center(i) < 0 ? 2.0 : 1.5;
        f.cells[i].q = Vec::Zero(K);
      }
      for (SchemeKind s : {SchemeKind::EC, SchemeKind::ES1, SchemeKind::ES2}) {
        const StageEvaluation st = semidiscrete_rhs(b, f, s, g);
        Vec total = Vec::Zero(K);
        for (const Vec& r : st.rhs) total += f.dx * r.head(K);
        CHECK(total.cwiseAbs().maxCoeff() <= 1e-13);
      }
    }
  }

  TEST_CASE("semi-discrete energy balance") {
    const PceBasis b = build_basis(9);
    const Field f = random_field(b, 12, Boundary::Periodic);
    const StageEvaluation ec = semidiscrete_rhs(b, f, SchemeKind::EC, g);
    for (const EnergyBalance& e : energy_balance(b, ec, g, f.dx)) CHECK(std::abs(e.residual) <= 1e-10 * e.scale);
    for (SchemeKind s : {SchemeKind::ES1, SchemeKind::ES2}) {
      const StageEvaluation st = semidiscrete_rhs(b, f, s, g);
      for (const EnergyBalance& e : energy_balance(b, st, g, f.dx)) CHECK(e.residual <= 1e-10 * e.scale);
    }
  }

  TEST_CASE("ES2 limiter stays in the unit interval") {
    const PceBasis b = build_basis(5);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<CellData> c;
      for (int j = 0; j < 4; ++j) c.push_back(to_data(b, random_cell(b), g));
      const RoeEigensystem e =
          symmetrizer_eig(b, 0.5 * (c[1].state.h + c[2].state.h), 0.5 * (c[1].u + c[2].u), g);
      const Vec pi = es2_limiter(e, {&c[0], &c[1], &c[2], &c[3]});
      CHECK(pi.minCoeff() >= 0.0);
      CHECK(pi.maxCoeff() <= 1.0);
    }
  }

  TEST_CASE("ES2 limiter vanishes on a linear profile") {
    const PceBasis b = build_basis(3);
    const Vec h0 = random_height(3), dh = 0.01 * random_vec(3), B = Vec::Zero(3);
    std::vector<CellData> c;
    for (int j = 0; j < 4; ++j) {
      // entropy variables linear in the cell index: u = 0 and h linear
      c.push_back(prepare_cell(b, {h0 + j * dh, Vec::Zero(3)}, Vec::Zero(3), B, g));
    }
    const RoeEigensystem e = symmetrizer_eig(b, 0.5 * (c[1].state.h + c[2].state.h), Vec::Zero(3), g);
    const Vec pi = es2_limiter(e, {&c[0], &c[1], &c[2], &c[3]});
    for (Eigen::Index l = 0; l < pi.size(); ++l) {
      // components with no jump keep full diffusion, the rest are fully reconstructed
      const double w = (e.T.transpose() * (c[2].V - c[1].V))[l];
      if (std::abs(w) > 1e-12) CHECK(std::abs(pi[l]) <= 1e-12);
    }
  }

  TEST_CASE("flat-bottom ES1 diffusion equals Roe diffusion") {
    const PceBasis b = build_basis(9);
    for (int trial = 0; trial < 100; ++trial) {
      RandomCell L = random_cell(b), R = random_cell(b);
      L.bottom.setZero();
      R.bottom.setZero();
      const CellData l = to_data(b, L, g), r = to_data(b, R, g);
      const Vec h_bar = 0.5 * (L.state.h + R.state.h), u_bar = 0.5 * (L.u + R.u);
      const RoeEigensystem e = symmetrizer_eig(b, h_bar, u_bar, g);
      const Vec jump_U = stack(R.state.h - L.state.h, R.state.q - L.state.q);
      const Vec roe = e.T * e.lambda.cwiseAbs().asDiagonal() * e.T.inverse() * jump_U;
      CHECK(rel_err(es1_diffusion(e, r.V - l.V), roe) <= 1e-9);

      // R R^T is the inverse entropy Hessian at the averaged state
      const Mat Pu = b.p_operator(u_bar);
      Mat UV(18, 18);
      UV << Mat::Identity(9, 9), Pu, Pu, Pu * Pu + g * b.p_operator(h_bar);
      UV /= g;
      CHECK(rel_err(Mat(e.R * e.R.transpose()), UV) <= 1e-10);
    }
  }
}
