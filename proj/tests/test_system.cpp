#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "convlab/errors.hpp"
#include "convlab/grid.hpp"
#include "convlab/system.hpp"

using namespace convlab;

namespace {

const SystemModel euler{SystemKind::Euler, 1.4, 0.0};
const SystemModel swe{SystemKind::ShallowWater, 0.0, 9.81};

// Finite-difference flux Jacobian and its eigenvalues via the cubic
// characteristic polynomial (all real for a hyperbolic system).
std::vector<double> jacobian_eigenvalues(const SystemModel& model,
                                         std::span<const double> state) {
  const int m = model.components();
  std::vector<double> A(m * m);
  std::vector<double> sp(state.begin(), state.end()), sm = sp, fp(m), fm(m);
  for (int j = 0; j < m; ++j) {
    const double h = 1e-7 * std::max(1.0, std::abs(state[j]));
    sp = {state.begin(), state.end()};
    sm = sp;
    sp[j] += h;
    sm[j] -= h;
    physical_flux(model, sp, fp);
    physical_flux(model, sm, fm);
    for (int i = 0; i < m; ++i) A[i * m + j] = (fp[i] - fm[i]) / (2.0 * h);
  }
  if (m == 2) {
    const double tr = A[0] + A[3];
    const double det = A[0] * A[3] - A[1] * A[2];
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 - disc, tr / 2.0 + disc};
  }
  // cubic lambda^3 + c2 lambda^2 + c1 lambda + c0 = 0 by the
  // trigonometric method (three real roots)
  const double tr = A[0] + A[4] + A[8];
  const double sum2 = A[0] * A[4] - A[1] * A[3] + A[0] * A[8] -
                      A[2] * A[6] + A[4] * A[8] - A[5] * A[7];
  const double det = A[0] * (A[4] * A[8] - A[5] * A[7]) -
                     A[1] * (A[3] * A[8] - A[5] * A[6]) +
                     A[2] * (A[3] * A[7] - A[4] * A[6]);
  const double c2 = -tr, c1 = sum2, c0 = -det;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double r = std::sqrt(std::max(0.0, -p * p * p / 27.0));
  const double phi = std::acos(std::clamp(-q / (2.0 * r), -1.0, 1.0));
  std::vector<double> roots(3);
  for (int k = 0; k < 3; ++k)
    roots[k] = 2.0 * std::sqrt(-p / 3.0) *
                   std::cos((phi + 2.0 * std::numbers::pi * k) / 3.0) -
               c2 / 3.0;
  return roots;
}

} // namespace

TEST_CASE("euler pressure") {
  CHECK(euler_pressure(1.0, 0.0, 2.5, {1.4}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(euler_pressure(1.0, 0.0, -1.0, {1.4}) ==
        doctest::Approx(-0.4).epsilon(1e-15));
  // linear in E at zero momentum
  CHECK(euler_pressure(1.0, 0.0, 5.0, {1.4}) ==
        doctest::Approx(2.0 * euler_pressure(1.0, 0.0, 2.5, {1.4}))
            .epsilon(1e-15));
  CHECK_THROWS_AS((void)euler_pressure(-1.0, 0.0, 1.0, {1.4}),
                  NumericalError);
}

TEST_CASE("physical flux") {
  std::array<double, 3> f3;
  physical_flux(euler, std::array{1.0, 0.0, 2.5}, f3);
  CHECK(f3[0] == 0.0);
  CHECK(f3[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f3[2] == 0.0);

  std::array<double, 2> f2;
  physical_flux(swe, std::array{1.0, 0.0}, f2);
  CHECK(f2[0] == 0.0);
  CHECK(f2[1] == doctest::Approx(4.905).epsilon(1e-15));

  physical_flux(swe, std::array{0.0, 0.0}, f2);
  CHECK(f2[0] == 0.0);
  CHECK(f2[1] == 0.0);
}

TEST_CASE("max wavespeed matches the flux Jacobian spectral radius") {
  CHECK(max_wavespeed(euler, std::array{1.0, 0.0, 2.5}) ==
        doctest::Approx(std::sqrt(1.4)).epsilon(1e-15));
  CHECK(max_wavespeed(swe, std::array{1.0, 0.0}) ==
        doctest::Approx(std::sqrt(9.81)).epsilon(1e-15));

  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> rho(0.2, 3.0), vel(-2.0, 2.0),
      pres(0.1, 4.0);
  for (int t = 0; t < 200; ++t) {
    const double r = rho(rng), u = vel(rng), p = pres(rng);
    std::array<double, 3> cons;
    conserved_from_primitive(euler, std::array{r, u, p}, cons);
    double spectral = 0.0;
    for (double lam : jacobian_eigenvalues(euler, cons))
      spectral = std::max(spectral, std::abs(lam));
    CHECK(max_wavespeed(euler, cons) ==
          doctest::Approx(spectral).epsilon(1e-5));

    std::array<double, 2> sw{r, r * u};
    spectral = 0.0;
    for (double lam : jacobian_eigenvalues(swe, sw))
      spectral = std::max(spectral, std::abs(lam));
    CHECK(max_wavespeed(swe, sw) == doctest::Approx(spectral).epsilon(1e-5));
  }
}

TEST_CASE("galilean shift bounds the speed increase") {
  std::array<double, 3> cons;
  conserved_from_primitive(euler, std::array{1.2, 0.4, 1.1}, cons);
  const double base = max_wavespeed(euler, cons);
  for (double s : {0.5, 1.0, 3.0}) {
    std::array<double, 3> shifted;
    conserved_from_primitive(euler, std::array{1.2, 0.4 + s, 1.1}, shifted);
    CHECK(max_wavespeed(euler, shifted) <= base + s + 1e-12);
  }
}

TEST_CASE("uniform state is a fixed point") {
  const auto g = build_grid(-1.0, 1.0, 24);
  for (const auto& model : {euler, swe}) {
    const int m = model.components();
    Field f(g.n_cells, m);
    std::vector<double> cons(m);
    if (m == 3)
      conserved_from_primitive(model, std::array{1.3, 0.2, 0.9}, cons);
    else
      conserved_from_primitive(model, std::array{0.7, 0.1}, cons);
    for (int i = 0; i < g.n_cells; ++i)
      for (int c = 0; c < m; ++c) f(i, c) = cons[c];
    const BoundarySpec trans{BcKind::Transmissive, {}};
    apply_bc(f, trans, trans);
    system_step(f, g, Scheme::AdbQuickest, model, 1e-3);
    for (int i = 0; i < g.n_cells; ++i)
      for (int c = 0; c < m; ++c)
        CHECK(f(i, c) == doctest::Approx(cons[c]).epsilon(1e-14));
  }
}

TEST_CASE("single periodic step conserves every component") {
  const auto g = build_grid(0.0, 1.0, 50);
  Field f(g.n_cells, 3);
  std::vector<double> cons(3);
  for (int i = 0; i < g.n_cells; ++i) {
    const double x = g.center(i);
    conserved_from_primitive(
        euler,
        std::array{1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * x), 0.3,
                   1.0 + 0.1 * std::cos(2.0 * std::numbers::pi * x)},
        cons);
    for (int c = 0; c < 3; ++c) f(i, c) = cons[c];
  }
  std::array<double, 3> sum0{};
  for (int i = 0; i < g.n_cells; ++i)
    for (int c = 0; c < 3; ++c) sum0[c] += f(i, c);
  const BoundarySpec per{BcKind::Periodic, {}};
  apply_bc(f, per, per);
  system_step(f, g, Scheme::Cubista, euler, 0.3 * g.dx);
  std::array<double, 3> sum1{};
  for (int i = 0; i < g.n_cells; ++i)
    for (int c = 0; c < 3; ++c) sum1[c] += f(i, c);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(sum1[c] - sum0[c]) <= 1e-12);
}

TEST_CASE("FOU runs equal an independent first-order Rusanov solver") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> rho(0.3, 2.0), vel(-0.5, 0.5),
      pres(0.4, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = 40;
    SystemProblem p;
    p.model = euler;
    p.grid = build_grid(-1.0, 1.0, n);
    p.scheme = Scheme::Fou;
    p.theta = 0.4;
    RiemannIC ic;
    ic.left = {rho(rng), vel(rng), pres(rng)};
    ic.right = {rho(rng), vel(rng), pres(rng)};
    ic.x0 = 0.0;
    p.initial_primitive = riemann_initial(p.model, ic);
    p.bc_left = p.bc_right = {BcKind::Transmissive, {}};

    // straight-line first-order Rusanov oracle, 15 steps
    std::vector<std::array<double, 3>> u(n);
    std::vector<double> prim(3), cons(3);
    for (int i = 0; i < n; ++i) {
      p.initial_primitive(p.grid.center(i), prim);
      conserved_from_primitive(p.model, prim, cons);
      for (int c = 0; c < 3; ++c) u[i][c] = cons[c];
    }
    const int steps = 15;
    double elapsed = 0.0;
    for (int s = 0; s < steps; ++s) {
      double amax = 0.0;
      for (int i = 0; i < n; ++i)
        amax = std::max(amax, max_wavespeed(p.model, u[i]));
      const double dt = p.theta * p.grid.dx / amax;
      elapsed += dt;
      auto cellv = [&](int i) {
        return u[std::clamp(i, 0, n - 1)];  // transmissive
      };
      std::vector<std::array<double, 3>> F(n + 1);
      for (int f = 0; f <= n; ++f) {
        const auto L = cellv(f - 1), R = cellv(f);
        const double a =
            std::max(max_wavespeed(p.model, L), max_wavespeed(p.model, R));
        std::array<double, 3> fL, fR;
        physical_flux(p.model, L, fL);
        physical_flux(p.model, R, fR);
        for (int c = 0; c < 3; ++c)
          F[f][c] = 0.5 * (fL[c] + fR[c]) - 0.5 * a * (R[c] - L[c]);
      }
      const double lam = dt / p.grid.dx;
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) u[i][c] -= lam * (F[i + 1][c] - F[i][c]);
    }

    p.t_final = elapsed;
    const Field got = system_run(p);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < 3; ++c)
        CHECK(got(i, c) == doctest::Approx(u[i][c]).epsilon(1e-10));
  }
}

TEST_CASE("mirror symmetry of the dam break") {
  SystemProblem p;
  p.model = swe;
  p.grid = build_grid(-2.0, 2.0, 100);
  p.scheme = Scheme::AdbQuickest;
  p.theta = 0.5;
  p.t_final = 0.2;
  RiemannIC ic;
  ic.left = {1.0, 0.0};
  ic.right = {0.1, 0.0};
  ic.x0 = 0.0;
  p.initial_primitive = riemann_initial(p.model, ic);
  p.bc_left = p.bc_right = {BcKind::Transmissive, {}};
  const Field a = system_run(p);

  SystemProblem q = p;
  RiemannIC mic;
  mic.left = {0.1, 0.0};
  mic.right = {1.0, 0.0};
  mic.x0 = 0.0;
  q.initial_primitive = riemann_initial(q.model, mic);
  const Field b = system_run(q);

  const int n = p.grid.n_cells;
  for (int i = 0; i < n; ++i) {
    CHECK(a(i, 0) == doctest::Approx(b(n - 1 - i, 0)).epsilon(1e-12));
    CHECK(a(i, 1) == doctest::Approx(-b(n - 1 - i, 1)).epsilon(1e-12));
  }
}

TEST_CASE("positivity failure halts with a diagnostic") {
  CHECK_THROWS_AS((void)max_wavespeed(swe, std::array{-0.1, 0.0}),
                  NumericalError);
  std::array<double, 3> bad;
  conserved_from_primitive(euler, std::array{1.0, 1.0, 1.0}, bad);
  bad[2] = 0.0;  // total energy below the kinetic part -> negative pressure
  CHECK_THROWS_AS((void)max_wavespeed(euler, bad), NumericalError);
}

TEST_CASE("inadmissible riemann states are rejected") {
  RiemannIC ic;
  ic.left = {-1.0, 0.0, 1.0};
  ic.right = {1.0, 0.0, 1.0};
  CHECK_THROWS_AS((void)riemann_initial(euler, ic), ConfigError);
}

TEST_CASE("t_final = 0 samples the initial condition verbatim") {
  SystemProblem p;
  p.model = swe;
  p.grid = build_grid(-1.0, 1.0, 20);
  p.t_final = 0.0;
  RiemannIC ic;
  ic.left = {1.0, 0.0};
  ic.right = {0.1, 0.0};
  p.initial_primitive = riemann_initial(p.model, ic);
  p.bc_left = p.bc_right = {BcKind::Transmissive, {}};
  const Field f = system_run(p);
  for (int i = 0; i < 20; ++i)
    CHECK(f(i, 0) == (p.grid.center(i) < 0.0 ? 1.0 : 0.1));
}
