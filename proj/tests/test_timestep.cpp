#include "support.hpp"

#include "sgswe/timestep.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sgswe;
using namespace sgswe::testing;

namespace {

Field constant_field(std::size_t nx, std::size_t K, double h0, double q0, double dx = 0.01) {
  Field f = make_field(nx, 0.0, dx * static_cast<double>(nx), K, Boundary::Outflow);
  for (auto& c : f.cells) {
    c.h = Vec::Zero(K);
    c.q = Vec::Zero(K);
    c.h[0] = h0;
    c.q[0] = q0;
  }
  return f;
}

Field smooth_wave(const PceBasis& b, std::size_t nx) {
  Field f = make_field(nx, 0.0, 1.0, b.size(), Boundary::Periodic);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = f.x_center(i);
    f.cells[i].h = b.project([&](double xi) { return 1.0 + 0.1 * std::sin(2 * std::numbers::pi * x) * (1 + 0.05 * xi); });
    f.cells[i].q = Vec::Zero(b.size());
  }
  return f;
}

double max_diff(const Field& a, const Field& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.nx(); ++i) {
    d = std::max({d, (a.cells[i].h - b.cells[i].h).cwiseAbs().maxCoeff(),
                  (a.cells[i].q - b.cells[i].q).cwiseAbs().maxCoeff()});
  }
  return d;
}

}  // namespace

TEST_SUITE("timestep") {
  TEST_CASE("positivity bound examples") {
    const PceBasis b = build_basis(1);
    Field one = constant_field(1, 1, 1.0, 0.0, 0.5);
    std::vector<Vec> fl = {Vec::Zero(2), Vec::Zero(2)};
    fl[1][0] = 2.0;
    CHECK(positivity_lambda(b, one, fl) == doctest::Approx(0.25));

    const Field still = constant_field(6, 1, 1.0, 0.0);
    CHECK(std::isinf(positivity_lambda(b, still, semidiscrete_rhs(b, still, SchemeKind::ES2, 1.0).fluxes)));
    const Field flow = constant_field(6, 1, 1.0, 0.3);
    CHECK(std::isinf(positivity_lambda(b, flow, semidiscrete_rhs(b, flow, SchemeKind::ES1, 1.0).fluxes)));

    Field dry = still;
    dry.cells[2].h[0] = 0.0;
    try {
      positivity_lambda(b, dry, std::vector<Vec>(7, Vec::Zero(2)));
      FAIL("expected failure");
    } catch (const SolverError& e) {
      CHECK(e.kind() == FailureKind::Hyperbolicity);
      CHECK(e.cell() == 2);
    }
  }

  TEST_CASE("CFL step") {
    const PceBasis b = build_basis(1);
    CHECK(cfl_dt(b, constant_field(8, 1, 1.0, 0.0), 0.45, 1.0) == doctest::Approx(0.0045).epsilon(1e-14));
    CHECK(cfl_dt(b, constant_field(8, 1, 4.0, 0.0), 0.45, 1.0) == doctest::Approx(0.00225).epsilon(1e-14));

    const PceBasis b9 = build_basis(9);
    Field f = make_field(10, 0.0, 1.0, 9, Boundary::Outflow);
    for (auto& c : f.cells) c = random_cell(b9).state;
    const double dt = cfl_dt(b9, f, 0.45, 1.0);
    double smax = 0.0;
    for (auto& c : f.cells) {
      const Vec u = velocity(b9, c, f.dx).velocity.u;
      smax = std::max(smax, characteristic_speeds(b9, c.h, u, 1.0).cwiseAbs().maxCoeff());
    }
    CHECK(dt * smax / f.dx == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(cfl_dt(b9, semidiscrete_rhs(b9, f, SchemeKind::EC, 1.0), 0.45, f.dx, 1.0) == doctest::Approx(dt).epsilon(1e-14));
  }

  TEST_CASE("positivity check") {
    const PceBasis b = build_basis(4);
    Field f = constant_field(5, 4, 1.0, 0.0);
    CHECK(positivity_check(b, f).ok);
    f.cells[3].h.setZero();
    const PositivityReport r = positivity_check(b, f);
    CHECK_FALSE(r.ok);
    CHECK(r.cell == 3);
    CHECK(r.min_value == 0.0);

    // dam-break data: 1.5 + 0.1 xi >= 1.4
    Field d = make_field(20, -1.0, 1.0, 4, Boundary::Outflow);
    for (std::size_t i = 0; i < 20; ++i) {
      d.cells[i].h = b.project([&](double xi) { return (d.x_center(i) < 0 ? 2.0 : 1.5) + 0.1 * xi; });
      d.cells[i].q = Vec::Zero(4);
    }
    const PositivityReport p = positivity_check(b, d);
    CHECK(p.ok);
    CHECK(p.min_value >= 1.4 - 1e-14);
  }

  TEST_CASE("lake at rest is a fixed point of the integrator") {
    const PceBasis b = build_basis(5);
    Field f = make_field(16, -1.0, 1.0, 5, Boundary::Outflow);
    Vec C = Vec::Zero(5);
    C[0] = 2.0;
    C[1] = 0.05;
    for (std::size_t i = 0; i < 16; ++i) {
      f.bottom[i] = b.project([&](double xi) { return 0.3 * std::exp(-10 * f.x_center(i) * f.x_center(i)) + 0.1 * xi; });
      f.cells[i].h = C - f.bottom[i];
      f.cells[i].q = Vec::Zero(5);
    }
    for (SchemeKind s : {SchemeKind::EC, SchemeKind::ES1, SchemeKind::ES2}) {
      Field g = f;
      TimeController ctl;
      ctl.t_final = 0.1;
      while (ctl.t < 0.1) ssp_rk3_step(b, g, s, 1.0, ctl, 0.1);
      CHECK(ctl.t == 0.1);
      CHECK(max_diff(f, g) <= 1e-13);
    }
  }

  TEST_CASE("zero residual takes the CFL step") {
    const PceBasis b = build_basis(3);
    Field f = constant_field(10, 3, 1.0, 0.2);
    const double expect = cfl_dt(b, f, 0.45, 1.0);
    TimeController ctl;
    ctl.t_final = 1.0;
    const StepOutcome out = ssp_rk3_step(b, f, SchemeKind::ES2, 1.0, ctl, 1.0);
    CHECK(std::isinf(out.lambda));
    CHECK(out.dt == expect);
    CHECK(ctl.t == expect);
    CHECK(out.restarts == 0);
  }

  TEST_CASE("final step lands on the stop time") {
    const PceBasis b = build_basis(3);
    Field f = smooth_wave(b, 20);
    TimeController ctl;
    ctl.t_final = 0.1;
    long steps = 0;
    while (ctl.t < 0.1) {
      const StepOutcome out = ssp_rk3_step(b, f, SchemeKind::ES1, 1.0, ctl, 0.1);
      CHECK(out.dt <= out.cfl_bound);
      CHECK(out.dt <= 0.9 * out.lambda);
      ++steps;
    }
    CHECK(ctl.t == 0.1);
    CHECK(steps > 1);
  }

  TEST_CASE("local error is fourth order in the step") {
    const PceBasis b = build_basis(3);
    const Field f0 = smooth_wave(b, 32);
    const auto advance = [&](double dt, int n) {
      Field f = f0;
      TimeController ctl;
      ctl.cfl = 100.0;  // step set by the stop time
      ctl.t_final = 1.0;
      for (int k = 1; k <= n; ++k) ssp_rk3_step(b, f, SchemeKind::EC, 1.0, ctl, dt * k / n);
      return f;
    };
    const double dt = 0.02;
    const Field ref = advance(dt, 64);
    const Field ref2 = advance(dt / 2, 64);
    const double e1 = max_diff(advance(dt, 1), ref);
    const double e2 = max_diff(advance(dt / 2, 1), ref2);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.25));
  }

  TEST_CASE("a stage violating positivity restarts the step") {
    // near-dry right state: the first stage bound is tighter than the initial one
    const PceBasis b = build_basis(3);
    Field f = make_field(40, -1.0, 1.0, 3, Boundary::Outflow);
    for (std::size_t i = 0; i < f.nx(); ++i) {
      f.cells[i].h = b.project([&](double xi) { return f.x_center(i) < 0 ? 1.0 + 0.1 * xi : 1e-3 * (1.5 + xi); });
      f.cells[i].q = Vec::Zero(3);
    }
    TimeController ctl;
    ctl.cfl = 0.9;
    ctl.t_final = 0.2;
    while (ctl.t < 0.2) {
      ssp_rk3_step(b, f, SchemeKind::ES1, 1.0, ctl, 0.2);
      CHECK(positivity_check(b, f).ok);
    }
    CHECK(ctl.restarts > 0);
  }
}
