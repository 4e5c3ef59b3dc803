// Command-line front end; talks to the solver library exclusively
// through the C API in convlab.h.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convlab.h"

namespace {

struct PassThrough {
  std::string flag;
  std::string key;
  std::string value;
  CLI::Option* opt = nullptr;
};

struct CommandState {
  std::string config_file;
  std::vector<PassThrough> options;
  bool full_mesh = false;
};

void add_common_options(CLI::App* cmd, CommandState& st) {
  cmd->add_option("--config", st.config_file, "Flat key = value config file");
  const std::pair<const char*, const char*> keys[] = {
      {"--problem", "problem"},
      {"--scheme", "scheme"},
      {"--schemes", "schemes"},
      {"--n-cells", "n_cells"},
      {"--theta", "theta"},
      {"--nu", "nu"},
      {"--gamma", "gamma"},
      {"--gravity", "gravity"},
      {"--t-final", "t_final"},
      {"--x-min", "x_min"},
      {"--x-max", "x_max"},
      {"--h-left", "h_left"},
      {"--h-right", "h_right"},
      {"--x0", "x0"},
      {"--snapshot-times", "snapshot_times"},
      {"--meshes", "meshes"},
      {"--eval-time", "eval_time"},
      {"--reference", "reference"},
      {"--series-terms", "series_terms"},
      {"--reference-cells", "reference_cells"},
      {"--cache-dir", "cache_dir"},
  };
  st.options.reserve(std::size(keys));
  for (const auto& [flag, key] : keys) {
    st.options.push_back({flag, key, "", nullptr});
    auto& pt = st.options.back();
    pt.opt = cmd->add_option(pt.flag, pt.value,
                             std::string("Overrides config key '") + key + "'");
  }
  cmd->add_flag("--full-mesh", st.full_mesh,
                "Use the full 12500-cell Euler resolution");
}

int fail(convlab_config* cfg, convlab_status st) {
  std::fprintf(stderr, "error: %s\n", convlab_last_error(cfg));
  return (int)st;
}

int apply_state(convlab_config* cfg, const CommandState& st) {
  if (!st.config_file.empty()) {
    const auto rc = convlab_config_load_file(cfg, st.config_file.c_str());
    if (rc != CONVLAB_OK) return fail(cfg, rc);
  }
  for (const auto& pt : st.options) {
    if (pt.opt->count() == 0) continue;
    const auto rc = convlab_config_set(cfg, pt.key.c_str(), pt.value.c_str());
    if (rc != CONVLAB_OK) return fail(cfg, rc);
  }
  if (st.full_mesh) {
    const auto rc = convlab_config_set(cfg, "n_cells", "12500");
    if (rc != CONVLAB_OK) return fail(cfg, rc);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"convlab: high-resolution convection schemes in normalized "
               "variables for 1D conservation laws"};
  app.require_subcommand(1);
  app.set_version_flag("--version", convlab_version());

  CommandState run_st, conv_st, cmp_st, ref_st;
  std::string run_out = "solution.csv";
  std::string conv_out = "convergence.csv";
  std::string cmp_out = "compare.csv";
  std::string cmp_err_out = "compare-errors.csv";
  std::string ref_out = "reference.csv";

  auto* run = app.add_subcommand("run", "Single simulation, CSV output");
  add_common_options(run, run_st);
  run->add_option("-o,--out", run_out, "Output CSV path");

  auto* conv = app.add_subcommand("converge", "Grid-refinement study");
  add_common_options(conv, conv_st);
  conv->add_option("-o,--out", conv_out, "Output CSV path");

  auto* cmp = app.add_subcommand("compare", "Multi-scheme comparison");
  add_common_options(cmp, cmp_st);
  cmp->add_option("-o,--out", cmp_out, "Merged solution CSV path");
  cmp->add_option("--out-errors", cmp_err_out, "Absolute-error CSV path");

  auto* ref = app.add_subcommand("reference",
                                 "Generate/cache a reference solution");
  add_common_options(ref, ref_st);
  ref->add_option("-o,--out", ref_out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : (int)CONVLAB_ERR_CONFIG;
  }

  const std::unique_ptr<convlab_config, void (*)(convlab_config*)> cfg(
      convlab_config_create(), convlab_config_destroy);

  if (run->parsed()) {
    if (const int rc = apply_state(cfg.get(), run_st)) return rc;
    const auto st = convlab_run(cfg.get(), run_out.c_str());
    return st == CONVLAB_OK ? 0 : fail(cfg.get(), st);
  }
  if (conv->parsed()) {
    if (const int rc = apply_state(cfg.get(), conv_st)) return rc;
    const auto st = convlab_converge(cfg.get(), conv_out.c_str());
    return st == CONVLAB_OK ? 0 : fail(cfg.get(), st);
  }
  if (cmp->parsed()) {
    if (const int rc = apply_state(cfg.get(), cmp_st)) return rc;
    const auto st =
        convlab_compare(cfg.get(), cmp_out.c_str(), cmp_err_out.c_str());
    return st == CONVLAB_OK ? 0 : fail(cfg.get(), st);
  }
  if (const int rc = apply_state(cfg.get(), ref_st)) return rc;
  const auto st = convlab_reference(cfg.get(), ref_out.c_str());
  return st == CONVLAB_OK ? 0 : fail(cfg.get(), st);
}
