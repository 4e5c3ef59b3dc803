#include "convlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "convlab/csv.hpp"
#include "convlab/errors.hpp"
#include "convlab/reference.hpp"

namespace convlab {

namespace {

double pick(double value, double fallback) {
  return value < 0.0 ? fallback : value;
}

double pick_nan(double value, double fallback) {
  return std::isnan(value) ? fallback : value;
}

std::vector<std::string> component_names(const RunConfig& cfg) {
  if (cfg.problem == "euler-shock-tube") return {"rho", "u", "p"};
  if (cfg.problem == "swe-dambreak") return {"h", "u"};
  return {"u"};
}

Field primitives_of(const SystemModel& model, const Field& cons) {
  const int m = model.components();
  Field prim(cons.n_cells(), m, cons.n_ghost());
  std::vector<double> c(m), p(m);
  for (int i = 0; i < cons.n_cells(); ++i) {
    for (int k = 0; k < m; ++k) c[k] = cons(i, k);
    primitive_from_conserved(model, c, p);
    for (int k = 0; k < m; ++k) prim(i, k) = p[k];
  }
  return prim;
}

void validate_common(const RunConfig& cfg, double theta, double t_final,
                     double nu) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw ConfigError("theta must lie in (0,1], got " + format_g17(theta));
  if (!(t_final >= 0.0))
    throw ConfigError("t_final must be non-negative");
  if (nu < 0.0) throw ConfigError("nu must be non-negative");
  if (!cfg.snapshot_times.empty() &&
      (cfg.problem == "euler-shock-tube" || cfg.problem == "swe-dambreak"))
    throw ConfigError("snapshots are only supported for Burgers problems");
}

} // namespace

PreparedRun prepare(const RunConfig& cfg) {
  PreparedRun r;
  if (cfg.problem == "burgers-inviscid") {
    const double xmin = pick_nan(cfg.x_min, 0.0);
    const double xmax = pick_nan(cfg.x_max, 2.0 * std::numbers::pi);
    BurgersProblem p;
    p.grid = build_grid(xmin, xmax, cfg.n_cells < 0 ? 400 : cfg.n_cells);
    p.scheme = cfg.scheme;
    p.nu = pick(cfg.nu, 0.0);
    p.theta = pick(cfg.theta, 0.5);
    p.t_final = pick(cfg.t_final, 1.0);
    p.initial = [](double x) { return std::sin(x); };
    p.bc_left = p.bc_right = {BcKind::Periodic, {}};
    validate_common(cfg, p.theta, p.t_final, p.nu);
    r.burgers = std::move(p);
    r.snapshot_times = cfg.snapshot_times;
    r.reference = cfg.reference == "default" ? "series" : cfg.reference;
  } else if (cfg.problem == "burgers-viscous") {
    BurgersProblem p;
    p.grid = build_grid(pick_nan(cfg.x_min, -1.0), pick_nan(cfg.x_max, 1.0),
                        cfg.n_cells < 0 ? 400 : cfg.n_cells);
    p.scheme = cfg.scheme;
    p.nu = pick(cfg.nu, 0.1);
    p.theta = pick(cfg.theta, 0.5);
    p.t_final = pick(cfg.t_final, 0.9);
    p.initial = [](double x) { return -std::sin(std::numbers::pi * x); };
    p.bc_left = p.bc_right = {BcKind::Dirichlet, {0.0}};
    validate_common(cfg, p.theta, p.t_final, p.nu);
    r.burgers = std::move(p);
    r.snapshot_times = cfg.snapshot_times.empty()
                           ? std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9}
                           : cfg.snapshot_times;
    r.reference = cfg.reference == "default" ? "none" : cfg.reference;
  } else if (cfg.problem == "euler-shock-tube") {
    r.is_system = true;
    SystemProblem p;
    p.model = {SystemKind::Euler, cfg.gamma, 0.0};
    if (!(cfg.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    p.grid = build_grid(pick_nan(cfg.x_min, -5.0), pick_nan(cfg.x_max, 5.0),
                        cfg.n_cells < 0 ? 2500 : cfg.n_cells);
    p.scheme = cfg.scheme;
    p.theta = pick(cfg.theta, 0.6);
    p.t_final = pick(cfg.t_final, 5.0);
    RiemannIC ic;
    ic.left = {1.515695, 0.523346, 1.80500};
    ic.right = {1.0, 0.0, 1.0};
    ic.x0 = pick_nan(cfg.x0, -4.5);
    ic.perturb_right = [](double x, std::span<double> prim) {
      prim[0] = 1.0 + 0.1 * std::sin(20.0 * std::numbers::pi * x);
    };
    p.initial_primitive = riemann_initial(p.model, std::move(ic));
    p.bc_left = p.bc_right = {BcKind::Transmissive, {}};
    p.tag = "euler-titarev-toro";
    validate_common(cfg, p.theta, p.t_final, 0.0);
    r.system = std::move(p);
    r.reference = cfg.reference == "default" ? "none" : cfg.reference;
  } else if (cfg.problem == "swe-dambreak") {
    r.is_system = true;
    SystemProblem p;
    p.model = {SystemKind::ShallowWater, 0.0, cfg.gravity};
    if (!(cfg.gravity > 0.0)) throw ConfigError("gravity must be positive");
    p.grid = build_grid(pick_nan(cfg.x_min, -5.0), pick_nan(cfg.x_max, 5.0),
                        cfg.n_cells < 0 ? 400 : cfg.n_cells);
    p.scheme = cfg.scheme;
    p.theta = pick(cfg.theta, 0.6);
    p.t_final = pick(cfg.t_final, 1.0);
    RiemannIC ic;
    ic.left = {cfg.h_left, 0.0};
    ic.right = {cfg.h_right, 0.0};
    ic.x0 = pick_nan(cfg.x0, 0.0);
    p.initial_primitive = riemann_initial(p.model, std::move(ic));
    p.bc_left = p.bc_right = {BcKind::Transmissive, {}};
    p.tag = "swe-dambreak";
    validate_common(cfg, p.theta, p.t_final, 0.0);
    r.system = std::move(p);
    r.reference = cfg.reference == "default" ? "exact" : cfg.reference;
  } else {
    throw ConfigError("unknown problem: " + cfg.problem);
  }
  return r;
}

Field sample_reference(const RunConfig& cfg, const PreparedRun& run) {
  if (run.reference == "series" || run.reference == "characteristics") {
    if (cfg.problem != "burgers-inviscid")
      throw ConfigError("reference '" + run.reference +
                        "' is only defined for burgers-inviscid");
    const auto& p = run.burgers;
    // the characteristic map is single-valued only while t*max|u0'| < 1
    if (run.reference == "characteristics" && p.t_final >= 1.0)
      throw OracleError("characteristics reference is multi-valued at t >= 1 "
                        "for the sine initial condition");
    Field ref(p.grid.n_cells, 1);
    for (int i = 0; i < p.grid.n_cells; ++i) {
      const double x = p.grid.center(i);
      ref(i) = run.reference == "series"
                   ? platzman_u(x, p.t_final, cfg.series_terms)
                   : burgers_characteristics(
                         x, p.t_final, [](double y) { return std::sin(y); },
                         -1.0, 1.0);
    }
    return ref;
  }
  if (run.reference == "exact") {
    if (cfg.problem != "swe-dambreak")
      throw ConfigError("reference 'exact' is only defined for swe-dambreak");
    const auto& p = run.system;
    const DamBreakSolution sol =
        swe_dambreak_exact(cfg.h_left, cfg.h_right, cfg.gravity);
    const double x0 = pick_nan(cfg.x0, 0.0);
    Field ref(p.grid.n_cells, 2);
    for (int i = 0; i < p.grid.n_cells; ++i) {
      const double x = p.grid.center(i);
      double h, u;
      if (p.t_final > 0.0)
        sol.sample((x - x0) / p.t_final, h, u);
      else {
        h = x < x0 ? cfg.h_left : cfg.h_right;
        u = 0.0;
      }
      ref(i, 0) = h;
      ref(i, 1) = u;
    }
    return ref;
  }
  if (run.reference == "fou-fine") {
    if (cfg.problem != "euler-shock-tube")
      throw ConfigError(
          "reference 'fou-fine' is only defined for euler-shock-tube");
    const auto& p = run.system;
    if (cfg.reference_cells % p.grid.n_cells != 0)
      throw ConfigError("reference_cells must be a multiple of n_cells");
    Field fine = euler_reference_first_order(p, cfg.reference_cells,
                                             resolve_cache_dir(cfg));
    return primitives_of(p.model, project_to_coarse(fine, p.grid.n_cells));
  }
  throw ConfigError("no reference available for selector '" + run.reference +
                    "'");
}

ErrorReport error_norms(const Field& num, const Field& ref, int component) {
  if (num.n_cells() != ref.n_cells())
    throw ConfigError("error norms: fields live on different grids");
  double s1 = 0, s2 = 0, si = 0, r1 = 0, r2 = 0, ri = 0;
  for (int i = 0; i < num.n_cells(); ++i) {
    const double d = num(i, component) - ref(i, component);
    const double r = ref(i, component);
    s1 += std::abs(d);
    s2 += d * d;
    si = std::max(si, std::abs(d));
    r1 += std::abs(r);
    r2 += r * r;
    ri = std::max(ri, std::abs(r));
  }
  if (r1 == 0.0 || ri == 0.0)
    throw ConfigError("error norms: reference is identically zero");
  ErrorReport rep;
  rep.l1 = s1 / r1;
  rep.l2 = std::sqrt(s2) / std::sqrt(r2);
  rep.linf = si / ri;
  rep.n_cells = num.n_cells();
  return rep;
}

double observed_order(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0))
    throw ConfigError("observed order requires positive errors");
  return std::log(e_coarse / e_fine) / std::log(2.0);
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg) {
  if (cfg.problem != "burgers-inviscid")
    throw ConfigError("convergence study is defined for burgers-inviscid");
  if (cfg.meshes.size() < 2)
    throw ConfigError("convergence study needs at least two meshes");
  for (std::size_t i = 1; i < cfg.meshes.size(); ++i)
    if (cfg.meshes[i] != 2 * cfg.meshes[i - 1])
      throw ConfigError("mesh list must strictly double");
  if (!(cfg.eval_time > 0.0))
    throw ConfigError("eval_time must be positive");

  std::vector<ConvergenceRow> table;
  for (std::size_t k = 0; k < cfg.meshes.size(); ++k) {
    RunConfig mesh_cfg = cfg;
    mesh_cfg.n_cells = cfg.meshes[k];
    mesh_cfg.theta = pick(cfg.theta, 0.2);
    mesh_cfg.nu = 0.0;
    mesh_cfg.t_final = cfg.eval_time;
    mesh_cfg.reference = "characteristics";
    mesh_cfg.snapshot_times.clear();
    const PreparedRun run = prepare(mesh_cfg);
    const Field num = burgers_run(run.burgers);
    const Field ref = sample_reference(mesh_cfg, run);
    const ErrorReport rep = error_norms(num, ref);

    ConvergenceRow row;
    row.n = cfg.meshes[k];
    row.l1 = rep.l1;
    row.l2 = rep.l2;
    row.linf = rep.linf;
    if (k == 0) {
      row.p1 = row.p2 = row.pinf = std::nan("");
    } else {
      const ConvergenceRow& prev = table.back();
      row.p1 = observed_order(prev.l1, rep.l1);
      row.p2 = observed_order(prev.l2, rep.l2);
      row.pinf = observed_order(prev.linf, rep.linf);
    }
    table.push_back(row);
  }
  return table;
}

namespace {

Field run_primitives(const PreparedRun& run) {
  if (run.is_system) return primitives_of(run.system.model,
                                          system_run(run.system));
  return burgers_run(run.burgers);
}

} // namespace

std::vector<ErrorReport> compare_schemes(const RunConfig& cfg,
                                         const std::string& out_solution_csv,
                                         const std::string& out_error_csv) {
  std::vector<Scheme> schemes = cfg.schemes;
  if (schemes.empty())
    schemes = {Scheme::Waceb, Scheme::Cubista, Scheme::AdbQuickest};
  std::vector<Scheme> unique;
  for (Scheme s : schemes) {
    if (std::find(unique.begin(), unique.end(), s) != unique.end()) {
      std::cerr << "warning: duplicate scheme '" << to_string(s)
                << "' dropped\n";
      continue;
    }
    unique.push_back(s);
  }

  RunConfig base = cfg;
  base.snapshot_times.clear();
  PreparedRun probe = prepare(base);
  if (probe.reference == "none")
    throw ConfigError("scheme comparison requires a reference solution");
  const Field ref = sample_reference(base, probe);

  const auto& grid = probe.is_system ? probe.system.grid : probe.burgers.grid;
  const std::string comp = component_names(base)[0];

  std::vector<ErrorReport> reports;
  std::vector<Field> solutions;
  for (Scheme s : unique) {
    RunConfig c = base;
    c.scheme = s;
    const PreparedRun run = prepare(c);
    Field sol = run_primitives(run);
    ErrorReport rep = error_norms(sol, ref);
    rep.scheme = s;
    rep.tag = cfg.problem;
    reports.push_back(rep);
    solutions.push_back(std::move(sol));
  }

  auto open = [](const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write: " + path);
    return out;
  };
  if (!out_solution_csv.empty()) {
    auto out = open(out_solution_csv);
    std::vector<std::string> header{"x"};
    for (Scheme s : unique) header.push_back(comp + "_" + to_string(s));
    header.push_back(comp + "_ref");
    write_csv_line(out, header);
    for (int i = 0; i < grid.n_cells; ++i) {
      std::vector<double> row{grid.center(i)};
      for (const Field& f : solutions) row.push_back(f(i, 0));
      row.push_back(ref(i, 0));
      write_csv_row(out, row);
    }
  }
  if (!out_error_csv.empty()) {
    auto out = open(out_error_csv);
    std::vector<std::string> header{"x"};
    for (Scheme s : unique)
      header.push_back(std::string("err_") + to_string(s));
    write_csv_line(out, header);
    for (int i = 0; i < grid.n_cells; ++i) {
      std::vector<double> row{grid.center(i)};
      for (const Field& f : solutions)
        row.push_back(std::abs(f(i, 0) - ref(i, 0)));
      write_csv_row(out, row);
    }
  }
  return reports;
}

void do_run(const RunConfig& cfg, const std::string& out_csv) {
  const PreparedRun run = prepare(cfg);
  const auto names = component_names(cfg);
  const auto& grid = run.is_system ? run.system.grid : run.burgers.grid;

  Field sol;
  if (run.is_system) {
    sol = primitives_of(run.system.model, system_run(run.system));
  } else if (!run.snapshot_times.empty() && !out_csv.empty()) {
    auto emit = [&](double t, const Field& u) {
      char stamp[32];
      std::snprintf(stamp, sizeof stamp, "%g", t);  // short label, not data
      std::ofstream out(out_csv + ".t" + stamp + ".csv");
      std::vector<std::string> header{"x", "u"};
      write_csv_line(out, header);
      for (int i = 0; i < grid.n_cells; ++i)
        write_csv_row(out, std::vector<double>{grid.center(i), u(i)});
    };
    sol = burgers_run(run.burgers, run.snapshot_times, emit);
  } else {
    sol = burgers_run(run.burgers, run.snapshot_times);
  }

  const bool with_ref = run.reference != "none";
  Field ref;
  if (with_ref) ref = sample_reference(cfg, run);

  if (out_csv.empty()) return;
  std::ofstream out(out_csv);
  if (!out) throw ConfigError("cannot write: " + out_csv);
  std::vector<std::string> header{"x"};
  for (const auto& n : names) header.push_back(n);
  if (with_ref)
    for (const auto& n : names) header.push_back(n + "_ref");
  write_csv_line(out, header);
  for (int i = 0; i < grid.n_cells; ++i) {
    std::vector<double> row{grid.center(i)};
    for (int c = 0; c < (int)names.size(); ++c) row.push_back(sol(i, c));
    if (with_ref)
      for (int c = 0; c < (int)names.size(); ++c) row.push_back(ref(i, c));
    write_csv_row(out, row);
  }
}

void do_converge(const RunConfig& cfg, const std::string& out_csv) {
  const auto table = convergence_study(cfg);
  if (out_csv.empty()) return;
  std::ofstream out(out_csv);
  if (!out) throw ConfigError("cannot write: " + out_csv);
  const std::vector<std::string> header{"N",  "L1",   "p1", "L2",
                                        "p2", "Linf", "pinf"};
  write_csv_line(out, header);
  for (const auto& row : table) {
    std::vector<std::string> cells{std::to_string(row.n), format_g17(row.l1)};
    cells.push_back(std::isnan(row.p1) ? "" : format_g17(row.p1));
    cells.push_back(format_g17(row.l2));
    cells.push_back(std::isnan(row.p2) ? "" : format_g17(row.p2));
    cells.push_back(format_g17(row.linf));
    cells.push_back(std::isnan(row.pinf) ? "" : format_g17(row.pinf));
    write_csv_line(out, cells);
  }
}

void do_reference(const RunConfig& cfg, const std::string& out_csv) {
  RunConfig c = cfg;
  if (c.reference == "default" || c.reference == "none") {
    if (c.problem == "burgers-inviscid") c.reference = "series";
    else if (c.problem == "swe-dambreak") c.reference = "exact";
    else if (c.problem == "euler-shock-tube") c.reference = "fou-fine";
    else
      throw ConfigError("no reference defined for problem " + c.problem);
  }
  c.snapshot_times.clear();

  if (c.reference == "fou-fine") {
    // Emit the fine-grid first-order reference itself.
    const PreparedRun run = prepare(c);
    Field fine = euler_reference_first_order(run.system, c.reference_cells,
                                             resolve_cache_dir(c));
    const Field prim = primitives_of(run.system.model, fine);
    const Grid1D fine_grid = build_grid(run.system.grid.x_min,
                                        run.system.grid.x_max,
                                        c.reference_cells);
    if (out_csv.empty()) return;
    std::ofstream out(out_csv);
    if (!out) throw ConfigError("cannot write: " + out_csv);
    const std::vector<std::string> header{"x", "rho", "u", "p"};
    write_csv_line(out, header);
    for (int i = 0; i < fine_grid.n_cells; ++i)
      write_csv_row(out, std::vector<double>{fine_grid.center(i), prim(i, 0),
                                             prim(i, 1), prim(i, 2)});
    return;
  }

  const PreparedRun run = prepare(c);
  const Field ref = sample_reference(c, run);
  const auto names = component_names(c);
  const auto& grid = run.is_system ? run.system.grid : run.burgers.grid;
  if (out_csv.empty()) return;
  std::ofstream out(out_csv);
  if (!out) throw ConfigError("cannot write: " + out_csv);
  std::vector<std::string> header{"x"};
  for (const auto& n : names) header.push_back(n);
  write_csv_line(out, header);
  for (int i = 0; i < grid.n_cells; ++i) {
    std::vector<double> row{grid.center(i)};
    for (int c2 = 0; c2 < (int)names.size(); ++c2) row.push_back(ref(i, c2));
    write_csv_row(out, row);
  }
}

} // namespace convlab
