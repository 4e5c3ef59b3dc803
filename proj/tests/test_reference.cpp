#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include <doctest.h>

#include "convlab/errors.hpp"
#include "convlab/reference.hpp"

using namespace convlab;

namespace {

// Direct power-series oracle: J_n(x) = sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!)
double bessel_series(int n, double x) {
  double term = std::pow(0.5 * x, n);
  for (int k = 1; k <= n; ++k) term /= k;
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= -0.25 * x * x / (k * (n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

} // namespace

TEST_CASE("bessel: basic values and domain") {
  CHECK(bessel_jn(0, 0.0) == 1.0);
  CHECK(bessel_jn(1, 0.0) == 0.0);
  CHECK(bessel_jn(1, 1.0) ==
        doctest::Approx(bessel_series(1, 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS((void)bessel_jn(-1, 1.0), ConfigError);
  CHECK_THROWS_AS((void)bessel_jn(601, 1.0), ConfigError);
  CHECK_THROWS_AS((void)bessel_jn(3, 2e4), ConfigError);
}

TEST_CASE("bessel matches the power-series oracle") {
  for (int n = 0; n <= 20; ++n)
    for (double x : {0.1, 0.5, 1.0, 2.5, 5.0, 8.0, 10.0}) {
      const double ref = bessel_series(n, x);
      CHECK(bessel_jn(n, x) == doctest::Approx(ref).epsilon(1e-11));
      CHECK(std::abs(bessel_jn(n, x) - ref) < 1e-12);
    }
}

TEST_CASE("bessel parity identity") {
  for (int n : {0, 1, 2, 5, 11})
    for (double x : {0.3, 1.7, 4.2}) {
      const double sign = n % 2 ? -1.0 : 1.0;
      CHECK(bessel_jn(n, -x) ==
            doctest::Approx(sign * bessel_jn(n, x)).epsilon(1e-14));
    }
}

TEST_CASE("bessel three-term recurrence") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> order(1, 60);
  std::uniform_real_distribution<double> arg(0.5, 80.0);
  for (int t = 0; t < 200; ++t) {
    const int n = order(rng);
    const double x = arg(rng);
    const double lhs = bessel_jn(n - 1, x) + bessel_jn(n + 1, x);
    const double rhs = (2.0 * n / x) * bessel_jn(n, x);
    CHECK(std::abs(lhs - rhs) <=
          1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST_CASE("platzman series") {
  SUBCASE("small t recovers the initial condition") {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = 2.0 * std::numbers::pi * i / 100.0;
      worst = std::max(worst,
                       std::abs(platzman_u(x, 1e-8, 200) - std::sin(x)));
    }
    CHECK(worst <= 1e-6);
  }
  SUBCASE("odd symmetry zeros") {
    for (double t : {0.2, 0.5, 1.0}) {
      CHECK(std::abs(platzman_u(0.0, t)) <= 1e-12);
      CHECK(std::abs(platzman_u(std::numbers::pi, t)) <= 1e-9);
    }
  }
  SUBCASE("agrees with the characteristics oracle pre-shock") {
    auto u0 = [](double x) { return std::sin(x); };
    for (double x : {0.5, 1.0, 2.0, 3.0, 4.5, 6.0})
      CHECK(std::abs(platzman_u(x, 0.5) -
                     burgers_characteristics(x, 0.5, u0, -1.0, 1.0)) <= 1e-6);
  }
  SUBCASE("truncation stability before shock formation") {
    // at t = 1 the coefficients decay only algebraically, so this
    // tolerance is meaningful only for t < 1
    for (double x : {0.7, 2.1, 3.9})
      for (double t : {0.3, 0.6, 0.8})
        CHECK(std::abs(platzman_u(x, t, 500) - platzman_u(x, t, 600)) <= 1e-8);
  }
}

TEST_CASE("characteristics solver") {
  auto u0 = [](double x) { return std::sin(x); };
  CHECK(burgers_characteristics(1.2, 0.0, u0, -1.0, 1.0) == std::sin(1.2));
  for (double t : {0.1, 0.5, 0.9})
    CHECK(std::abs(burgers_characteristics(std::numbers::pi, t, u0, -1.0,
                                           1.0)) <= 1e-13);
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> xs(0.0, 2.0 * std::numbers::pi),
      ts(0.0, 0.9);
  for (int k = 0; k < 300; ++k) {
    const double x = xs(rng), t = ts(rng);
    const double u = burgers_characteristics(x, t, u0, -1.0, 1.0);
    CHECK(std::abs(u - std::sin(x - u * t)) <= 1e-13);
  }
}

TEST_CASE("exact dam break") {
  SUBCASE("equal depths give a constant state") {
    const auto s = swe_dambreak_exact(0.7, 0.7, 9.81);
    double h, u;
    for (double xi : {-3.0, 0.0, 2.0}) {
      s.sample(xi, h, u);
      CHECK(h == 0.7);
      CHECK(u == 0.0);
    }
  }

  SUBCASE("golden star state, hL=1 hR=0.1 g=9.81") {
    // frozen from an independent bisection on the two-wave depth function
    const auto s = swe_dambreak_exact(1.0, 0.1, 9.81);
    CHECK(s.h_star == doctest::Approx(0.396174816799443).epsilon(1e-10));
    CHECK(s.u_star == doctest::Approx(2.321354995640744).epsilon(1e-10));
    CHECK(s.shock_speed ==
          doctest::Approx(3.105133650668214).epsilon(1e-10));
    CHECK(s.rankine_hugoniot_residual() <= 1e-10);
  }

  SUBCASE("wave ordering and entropy condition") {
    for (auto [hL, hR] : {std::pair{1.0, 0.1}, {2.0, 0.5}, {1.0, 0.9}}) {
      const auto s = swe_dambreak_exact(hL, hR, 9.81);
      CHECK(s.head_speed < s.tail_speed);
      CHECK(s.tail_speed < s.shock_speed);
      // characteristics converge into the shock
      const double cR = std::sqrt(9.81 * hR);
      CHECK(s.u_star + std::sqrt(9.81 * s.h_star) > s.shock_speed);
      CHECK(s.shock_speed > 0.0 + cR);
      CHECK(s.rankine_hugoniot_residual() <= 1e-10);
    }
  }

  SUBCASE("far field returns the undisturbed states") {
    const auto s = swe_dambreak_exact(1.0, 0.1, 9.81);
    double h, u;
    s.sample(-100.0, h, u);
    CHECK(h == 1.0);
    CHECK(u == 0.0);
    s.sample(100.0, h, u);
    CHECK(h == 0.1);
    CHECK(u == 0.0);
  }

  SUBCASE("invalid inputs rejected") {
    CHECK_THROWS_AS((void)swe_dambreak_exact(0.1, 1.0, 9.81), ConfigError);
    CHECK_THROWS_AS((void)swe_dambreak_exact(1.0, 0.0, 9.81), ConfigError);
  }
}

TEST_CASE("fine-grid reference cache") {
  namespace fs = std::filesystem;
  const std::string dir = "test-ref-cache";
  fs::remove_all(dir);

  SystemProblem p;
  p.model = {SystemKind::Euler, 1.4, 0.0};
  p.grid = build_grid(-1.0, 1.0, 20);
  p.scheme = Scheme::AdbQuickest;
  p.theta = 0.5;
  p.t_final = 0.05;
  RiemannIC ic;
  ic.left = {1.0, 0.0, 1.0};
  ic.right = {0.5, 0.0, 0.4};
  p.initial_primitive = riemann_initial(p.model, ic);
  p.bc_left = p.bc_right = {BcKind::Transmissive, {}};
  p.tag = "cache-test";

  const Field a = euler_reference_first_order(p, 100, dir);
  CHECK(fs::exists(dir));
  const Field b = euler_reference_first_order(p, 100, dir);  // cache hit
  REQUIRE(a.n_cells() == b.n_cells());
  for (int i = 0; i < a.n_cells(); ++i)
    for (int c = 0; c < 3; ++c) CHECK(a(i, c) == b(i, c));
  fs::remove_all(dir);
}

TEST_CASE("conservative coarse projection") {
  Field fine(8, 1);
  for (int i = 0; i < 8; ++i) fine(i) = i;
  const Field coarse = project_to_coarse(fine, 4);
  CHECK(coarse(0) == 0.5);
  CHECK(coarse(3) == 6.5);
  CHECK_THROWS_AS((void)project_to_coarse(fine, 3), ConfigError);
}
