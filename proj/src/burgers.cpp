#include "convlab/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "convlab/errors.hpp"

namespace convlab {

namespace {
constexpr double eps_vel = 1e-8;

CourantContext face_ctx(Scheme scheme, double alpha, double dt, double dx) {
  if (scheme != Scheme::AdbQuickest) return {};
  return adb_breakpoints(std::clamp(alpha * dt / dx, 0.0, 1.0));
}
} // namespace

double burgers_dt(double max_speed, double dx, double theta, double nu) {
  double dt = theta * dx / std::max(max_speed, eps_vel);
  if (nu > 0.0) dt = std::min(dt, 0.25 * dx * dx / nu);
  return dt;
}

void burgers_step(Field& u, const Grid1D& grid, Scheme scheme, double nu,
                  double dt) {
  const int n = grid.n_cells;
  const double dx = grid.dx;
  std::vector<double> flux(n + 1);

  for (int f = 0; f <= n; ++f) {
    // Face f sits between cells f-1 and f.
    const double a_cell = std::max(std::abs(u(f - 1)), std::abs(u(f)));
    const CourantContext ctx = face_ctx(scheme, a_cell, dt, dx);
    const double uL = face_from_roles(u(f), u(f - 1), u(f - 2), scheme, ctx);
    const double uR = face_from_roles(u(f - 1), u(f), u(f + 1), scheme, ctx);
    const double alpha = std::max(std::abs(uL), std::abs(uR));
    flux[f] = 0.25 * (uL * uL + uR * uR) - 0.5 * alpha * (uR - uL);
  }

  Field out = u;
  const double lam = dt / dx;
  const double dvis = nu > 0.0 ? nu * dt / (dx * dx) : 0.0;
  for (int i = 0; i < n; ++i) {
    double v = u(i) - lam * (flux[i + 1] - flux[i]);
    if (dvis != 0.0) v += dvis * (u(i + 1) - 2.0 * u(i) + u(i - 1));
    out(i) = v;
  }
  u = std::move(out);

  if (!u.interior_finite()) {
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(u(i)))
        throw NumericalError("burgers: non-finite value at cell " +
                             std::to_string(i));
  }
}

Field sample_initial(const Grid1D& grid,
                     const std::function<double(double)>& u0) {
  Field u(grid.n_cells, 1, grid.n_ghost);
  for (int i = 0; i < grid.n_cells; ++i) u(i) = u0(grid.center(i));
  return u;
}

Field burgers_run(const BurgersProblem& p,
                  std::span<const double> snapshot_times,
                  const SnapshotHook& on_snapshot, const StepHook& per_step) {
  Field u = sample_initial(p.grid, p.initial);
  std::vector<double> snaps(snapshot_times.begin(), snapshot_times.end());
  std::sort(snaps.begin(), snaps.end());

  double t = 0.0;
  long step = 0;
  std::size_t snap_idx = 0;
  while (snap_idx < snaps.size() && snaps[snap_idx] <= 0.0) ++snap_idx;

  const double t_eps = 1e-12 * std::max(1.0, p.t_final);
  while (t < p.t_final - t_eps) {
    apply_bc(u, p.bc_left, p.bc_right);
    double max_speed = 0.0;
    for (int i = 0; i < p.grid.n_cells; ++i)
      max_speed = std::max(max_speed, std::abs(u(i)));
    double dt = burgers_dt(max_speed, p.grid.dx, p.theta, p.nu);

    double next_stop = p.t_final;
    if (snap_idx < snaps.size()) next_stop = std::min(next_stop, snaps[snap_idx]);
    bool lands = false;
    if (t + dt >= next_stop - t_eps) {
      dt = next_stop - t;
      lands = true;
    }

    try {
      burgers_step(u, p.grid, p.scheme, p.nu, dt);
    } catch (const NumericalError& e) {
      throw NumericalError("step " + std::to_string(step + 1) + ": " +
                           e.what());
    }
    t = lands ? next_stop : t + dt;
    ++step;
    if (per_step) per_step({step, t, dt}, u);
    if (lands && snap_idx < snaps.size() &&
        std::abs(t - snaps[snap_idx]) <= t_eps) {
      if (on_snapshot) on_snapshot(t, u);
      ++snap_idx;
    }
  }
  return u;
}

} // namespace convlab
