#pragma once

#include <string>
#include <vector>

#include "convlab/burgers.hpp"
#include "convlab/config.hpp"
#include "convlab/grid.hpp"
#include "convlab/system.hpp"

namespace convlab {

struct ErrorReport {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  int n_cells = 0;
  Scheme scheme = Scheme::Fou;
  std::string tag;
};

/// Relative error norms ||num - ref||_p / ||ref||_p for one component,
/// with a fixed left-to-right summation order. Throws ConfigError on
/// mismatched grids or an identically-zero reference.
ErrorReport error_norms(const Field& num, const Field& ref, int component = 0);

/// p = log(e_coarse/e_fine)/log 2. Both errors must be positive.
double observed_order(double e_coarse, double e_fine);

struct ConvergenceRow {
  int n = 0;
  double l1 = 0, p1 = 0, l2 = 0, p2 = 0, linf = 0, pinf = 0;  // p NaN in row 0
};

/// A concrete problem instance with all defaults resolved.
struct PreparedRun {
  bool is_system = false;
  BurgersProblem burgers;
  SystemProblem system;
  std::vector<double> snapshot_times;
  std::string reference;  // resolved selector
};

/// Resolves per-problem defaults and validates the configuration.
PreparedRun prepare(const RunConfig& cfg);

/// Reference solution in primitive variables, sampled at the cell
/// centers of the prepared run's grid at its final time.
Field sample_reference(const RunConfig& cfg, const PreparedRun& run);

/// Inviscid-Burgers grid refinement study against the characteristics
/// oracle. Meshes must strictly double.
std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg);

/// One run per scheme on a shared problem; duplicates are dropped with
/// a warning. Writes a merged solution CSV and an absolute-error CSV.
std::vector<ErrorReport> compare_schemes(const RunConfig& cfg,
                                         const std::string& out_solution_csv,
                                         const std::string& out_error_csv);

/// Subcommand bodies shared by the C API and tests.
void do_run(const RunConfig& cfg, const std::string& out_csv);
void do_converge(const RunConfig& cfg, const std::string& out_csv);
void do_reference(const RunConfig& cfg, const std::string& out_csv);

} // namespace convlab
