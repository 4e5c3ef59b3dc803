#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "convlab/burgers.hpp"  // StepInfo, StepHook
#include "convlab/grid.hpp"
#include "convlab/scheme.hpp"

namespace convlab {

enum class SystemKind { Euler, ShallowWater };

struct GasModel {
  double gamma = 1.4;
};

struct SweModel {
  double g = 9.81;
};

/// Hyperbolic system selector plus its physical constants.
struct SystemModel {
  SystemKind kind = SystemKind::Euler;
  double gamma = 1.4;  // Euler only
  double g = 9.81;     // shallow water only
  int components() const { return kind == SystemKind::Euler ? 3 : 2; }
};

/// Ideal gas: p = (gamma-1)(E - 0.5*mom^2/rho). Throws NumericalError
/// for rho <= 0; a negative result is returned to the caller.
double euler_pressure(double rho, double mom, double E, const GasModel& gas);

/// F = [rho u, rho u^2 + p, u(E+p)] (Euler) or [hu, hu^2 + g h^2/2] (SWE).
void physical_flux(const SystemModel& model, std::span<const double> state,
                   std::span<double> flux);

/// |u| + c with c = sqrt(gamma p / rho) resp. sqrt(g h).
/// Throws NumericalError on negative pressure or depth.
double max_wavespeed(const SystemModel& model, std::span<const double> state);

void conserved_from_primitive(const SystemModel& model,
                              std::span<const double> prim,
                              std::span<double> cons);
void primitive_from_conserved(const SystemModel& model,
                              std::span<const double> cons,
                              std::span<double> prim);

/// Two-state Riemann initial data in primitive variables, with optional
/// spatial perturbations applied on either side.
struct RiemannIC {
  std::vector<double> left, right;
  double x0 = 0.0;
  std::function<void(double x, std::span<double> prim)> perturb_left;
  std::function<void(double x, std::span<double> prim)> perturb_right;
};

/// Validates admissibility of both states and returns the sampling
/// function x -> primitives. Throws ConfigError on inadmissible states.
std::function<void(double, std::span<double>)>
riemann_initial(const SystemModel& model, RiemannIC ic);

struct SystemProblem {
  SystemModel model;
  Grid1D grid;
  Scheme scheme = Scheme::AdbQuickest;
  double theta = 0.6;
  double t_final = 1.0;
  std::function<void(double, std::span<double>)> initial_primitive;
  BoundarySpec bc_left, bc_right;
  std::string tag;  // stable identifier, used for reference caching
};

/// Samples the initial condition into a conserved-variable field.
Field sample_initial(const SystemProblem& p);

/// One forward-Euler step with per-component NVD reconstruction of the
/// conserved variables and a Rusanov flux. Ghosts must be filled.
void system_step(Field& f, const Grid1D& grid, Scheme scheme,
                 const SystemModel& model, double dt);

/// Time loop with dt = theta*dx/max_i wavespeed; positivity is checked
/// after every step and failures abort with a diagnostic.
Field system_run(const SystemProblem& p, const StepHook& per_step = {});

} // namespace convlab
