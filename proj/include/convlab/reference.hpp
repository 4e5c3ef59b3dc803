#pragma once

#include <functional>
#include <string>

#include "convlab/grid.hpp"
#include "convlab/system.hpp"

namespace convlab {

/// Bessel function of the first kind, J_n(x), by Miller's downward
/// recurrence with sum normalization. Valid for 0 <= n <= 600 and
/// |x| <= 1e4; negative arguments use J_n(-x) = (-1)^n J_n(x).
double bessel_jn(int n, double x);

/// Platzman series solution of the inviscid Burgers equation with
/// u(x,0) = sin(x): u(x,t) = -2 sum_{n=1}^{N} J_n(-n t)/(n t) sin(n x).
/// t = 0 returns the initial condition.
double platzman_u(double x, double t, int n_terms = 500);

/// Pre-shock exact solution of inviscid Burgers: solves u = u0(x - u t)
/// by bisection to residual <= 1e-13. u_min/u_max bound the range of u0.
/// Throws OracleError when no root is bracketed or convergence fails
/// (t too close to the shock time).
double burgers_characteristics(double x, double t,
                               const std::function<double(double)>& u0,
                               double u_min, double u_max);

/// Exact self-similar solution of the wet-wet dam break (still water,
/// hL >= hR): left rarefaction, star region, right shock.
struct DamBreakSolution {
  double hL = 1.0, hR = 0.1, g = 9.81;
  double h_star = 0.0, u_star = 0.0, c_star = 0.0;
  double head_speed = 0.0;   // rarefaction head
  double tail_speed = 0.0;   // rarefaction tail
  double shock_speed = 0.0;

  /// Samples the profile at similarity coordinate xi = x/t.
  void sample(double xi, double& h, double& u) const;

  /// Max |residual| of the two Rankine-Hugoniot conditions at the shock.
  double rankine_hugoniot_residual() const;
};

DamBreakSolution swe_dambreak_exact(double hL, double hR, double g);

/// First-order (FOU scheme) fine-grid run used as the Euler reference.
/// The result is cached on disk under cache_dir keyed by a content hash
/// of the configuration; cache writes are atomic (temp + rename).
Field euler_reference_first_order(const SystemProblem& base, int n_cells,
                                  const std::string& cache_dir);

/// Conservative projection of a fine field onto a coarser grid whose
/// cell count divides the fine one.
Field project_to_coarse(const Field& fine, int coarse_n);

} // namespace convlab
