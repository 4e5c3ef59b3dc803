#pragma once

#include <functional>
#include <span>

#include "convlab/grid.hpp"
#include "convlab/scheme.hpp"

namespace convlab {

struct BurgersProblem {
  Grid1D grid;
  Scheme scheme = Scheme::AdbQuickest;
  double nu = 0.0;       // kinematic viscosity
  double theta = 0.5;    // Courant number for the dt policy
  double t_final = 1.0;
  std::function<double(double)> initial;
  BoundarySpec bc_left, bc_right;
};

struct StepInfo {
  long step = 0;
  double t = 0.0;   // time after the step
  double dt = 0.0;
};

using StepHook = std::function<void(const StepInfo&, const Field&)>;
using SnapshotHook = std::function<void(double t, const Field&)>;

/// Convective dt = theta*dx/max(max_speed, 1e-8), capped by the
/// diffusive limit 0.25*dx^2/nu when nu > 0.
double burgers_dt(double max_speed, double dx, double theta, double nu);

/// One forward-Euler step of u_t + (u^2/2)_x = nu u_xx.
/// Ghost cells must be filled. Fluxes are Rusanov on NVD-reconstructed
/// left/right face states; ADBQUICKEST sees the face-local Courant
/// number alpha*dt/dx. Throws NumericalError on NaN/Inf.
void burgers_step(Field& u, const Grid1D& grid, Scheme scheme, double nu,
                  double dt);

Field sample_initial(const Grid1D& grid,
                     const std::function<double(double)>& u0);

/// Time loop: apply_bc -> dt -> step until t_final, with the last step
/// (and any snapshot step) clipped to land exactly on the target time.
Field burgers_run(const BurgersProblem& p,
                  std::span<const double> snapshot_times = {},
                  const SnapshotHook& on_snapshot = {},
                  const StepHook& per_step = {});

} // namespace convlab
