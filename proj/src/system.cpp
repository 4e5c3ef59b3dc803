#include "convlab/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "convlab/errors.hpp"

namespace convlab {

double euler_pressure(double rho, double mom, double E, const GasModel& gas) {
  if (!(rho > 0.0))
    throw NumericalError("euler: non-positive density " + std::to_string(rho));
  return (gas.gamma - 1.0) * (E - 0.5 * mom * mom / rho);
}

void physical_flux(const SystemModel& model, std::span<const double> state,
                   std::span<double> flux) {
  if (model.kind == SystemKind::Euler) {
    const double rho = state[0], mom = state[1], E = state[2];
    const double p = euler_pressure(rho, mom, E, {model.gamma});
    const double u = mom / rho;
    flux[0] = mom;
    flux[1] = mom * u + p;
    flux[2] = u * (E + p);
  } else {
    const double h = state[0], hu = state[1];
    if (h <= 0.0) {  // dry limit
      flux[0] = 0.0;
      flux[1] = 0.0;
      return;
    }
    const double u = hu / h;
    flux[0] = hu;
    flux[1] = hu * u + 0.5 * model.g * h * h;
  }
}

double max_wavespeed(const SystemModel& model, std::span<const double> state) {
  if (model.kind == SystemKind::Euler) {
    const double rho = state[0];
    const double p = euler_pressure(rho, state[1], state[2], {model.gamma});
    if (p < 0.0)
      throw NumericalError("euler: negative pressure " + std::to_string(p));
    return std::abs(state[1] / rho) + std::sqrt(model.gamma * p / rho);
  }
  const double h = state[0];
  if (h < 0.0)
    throw NumericalError("swe: negative depth " + std::to_string(h));
  if (h == 0.0) return 0.0;
  return std::abs(state[1] / h) + std::sqrt(model.g * h);
}

void conserved_from_primitive(const SystemModel& model,
                              std::span<const double> prim,
                              std::span<double> cons) {
  if (model.kind == SystemKind::Euler) {
    const double rho = prim[0], u = prim[1], p = prim[2];
    cons[0] = rho;
    cons[1] = rho * u;
    cons[2] = p / (model.gamma - 1.0) + 0.5 * rho * u * u;
  } else {
    cons[0] = prim[0];
    cons[1] = prim[0] * prim[1];
  }
}

void primitive_from_conserved(const SystemModel& model,
                              std::span<const double> cons,
                              std::span<double> prim) {
  if (model.kind == SystemKind::Euler) {
    prim[0] = cons[0];
    prim[1] = cons[1] / cons[0];
    prim[2] = euler_pressure(cons[0], cons[1], cons[2], {model.gamma});
  } else {
    prim[0] = cons[0];
    prim[1] = cons[0] > 0.0 ? cons[1] / cons[0] : 0.0;
  }
}

namespace {

void check_admissible(const SystemModel& model, std::span<const double> prim,
                      const char* side) {
  if (model.kind == SystemKind::Euler) {
    if (!(prim[0] > 0.0) || !(prim[2] > 0.0))
      throw ConfigError(std::string("riemann ic: inadmissible ") + side +
                        " state (need rho > 0, p > 0)");
  } else if (!(prim[0] > 0.0)) {
    throw ConfigError(std::string("riemann ic: inadmissible ") + side +
                      " state (need h > 0)");
  }
}

} // namespace

std::function<void(double, std::span<double>)>
riemann_initial(const SystemModel& model, RiemannIC ic) {
  const int m = model.components();
  if ((int)ic.left.size() != m || (int)ic.right.size() != m)
    throw ConfigError("riemann ic: wrong number of primitive components");
  check_admissible(model, ic.left, "left");
  check_admissible(model, ic.right, "right");
  return [ic = std::move(ic)](double x, std::span<double> prim) {
    const auto& base = x < ic.x0 ? ic.left : ic.right;
    std::copy(base.begin(), base.end(), prim.begin());
    const auto& perturb = x < ic.x0 ? ic.perturb_left : ic.perturb_right;
    if (perturb) perturb(x, prim);
  };
}

Field sample_initial(const SystemProblem& p) {
  const int m = p.model.components();
  Field f(p.grid.n_cells, m, p.grid.n_ghost);
  std::vector<double> prim(m), cons(m);
  for (int i = 0; i < p.grid.n_cells; ++i) {
    p.initial_primitive(p.grid.center(i), prim);
    conserved_from_primitive(p.model, prim, cons);
    for (int c = 0; c < m; ++c) f(i, c) = cons[c];
  }
  return f;
}

void system_step(Field& f, const Grid1D& grid, Scheme scheme,
                 const SystemModel& model, double dt) {
  const int n = grid.n_cells;
  const int m = model.components();
  const double dx = grid.dx;

  std::vector<double> flux((n + 1) * m);
  std::vector<double> uL(m), uR(m), fL(m), fR(m), cell(m);

  auto load = [&](int i, std::vector<double>& out) {
    for (int c = 0; c < m; ++c) out[c] = f(i, c);
  };

  for (int face = 0; face <= n; ++face) {
    // Face sits between cells face-1 and face.
    load(face - 1, uL);
    load(face, uR);
    const double a_cell =
        std::max(max_wavespeed(model, uL), max_wavespeed(model, uR));
    CourantContext ctx;
    if (scheme == Scheme::AdbQuickest)
      ctx = adb_breakpoints(std::clamp(a_cell * dt / dx, 0.0, 1.0));
    for (int c = 0; c < m; ++c) {
      uL[c] = face_from_roles(f(face, c), f(face - 1, c), f(face - 2, c),
                              scheme, ctx);
      uR[c] = face_from_roles(f(face - 1, c), f(face, c), f(face + 1, c),
                              scheme, ctx);
    }
    const double alpha =
        std::max(max_wavespeed(model, uL), max_wavespeed(model, uR));
    physical_flux(model, uL, fL);
    physical_flux(model, uR, fR);
    for (int c = 0; c < m; ++c)
      flux[face * m + c] =
          0.5 * (fL[c] + fR[c]) - 0.5 * alpha * (uR[c] - uL[c]);
  }

  const double lam = dt / dx;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c)
      f(i, c) -= lam * (flux[(i + 1) * m + c] - flux[i * m + c]);

  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c)
      if (!std::isfinite(f(i, c)))
        throw NumericalError("system: non-finite value at cell " +
                             std::to_string(i));
    load(i, cell);
    if (model.kind == SystemKind::Euler) {
      if (!(cell[0] > 0.0))
        throw NumericalError("system: non-positive density at cell " +
                             std::to_string(i));
      if (!(euler_pressure(cell[0], cell[1], cell[2], {model.gamma}) > 0.0))
        throw NumericalError("system: non-positive pressure at cell " +
                             std::to_string(i));
    } else if (cell[0] < 0.0) {
      throw NumericalError("system: negative depth at cell " +
                           std::to_string(i));
    }
  }
}

Field system_run(const SystemProblem& p, const StepHook& per_step) {
  Field f = sample_initial(p);
  std::vector<double> cell(p.model.components());

  double t = 0.0;
  long step = 0;
  const double t_eps = 1e-12 * std::max(1.0, p.t_final);
  while (t < p.t_final - t_eps) {
    apply_bc(f, p.bc_left, p.bc_right);
    double max_speed = 0.0;
    for (int i = 0; i < p.grid.n_cells; ++i) {
      for (int c = 0; c < p.model.components(); ++c) cell[c] = f(i, c);
      max_speed = std::max(max_speed, max_wavespeed(p.model, cell));
    }
    double dt = p.theta * p.grid.dx / std::max(max_speed, 1e-8);
    bool lands = false;
    if (t + dt >= p.t_final - t_eps) {
      dt = p.t_final - t;
      lands = true;
    }
    try {
      system_step(f, p.grid, p.scheme, p.model, dt);
    } catch (const NumericalError& e) {
      throw NumericalError("step " + std::to_string(step + 1) + ": " +
                           e.what());
    }
    t = lands ? p.t_final : t + dt;
    ++step;
    if (per_step) per_step({step, t, dt}, f);
  }
  return f;
}

} // namespace convlab
