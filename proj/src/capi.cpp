#include "convlab.h"

#include <string>

#include "convlab/analysis.hpp"
#include "convlab/config.hpp"
#include "convlab/errors.hpp"

struct convlab_config {
  convlab::RunConfig cfg;
  std::string last_error;
};

namespace {

template <class Fn>
convlab_status guarded(convlab_config* handle, Fn&& fn) {
  if (!handle) return CONVLAB_ERR_CONFIG;
  handle->last_error.clear();
  try {
    fn();
    return CONVLAB_OK;
  } catch (const convlab::ConfigError& e) {
    handle->last_error = e.what();
    return CONVLAB_ERR_CONFIG;
  } catch (const convlab::NumericalError& e) {
    handle->last_error = e.what();
    return CONVLAB_ERR_NUMERICAL;
  } catch (const convlab::OracleError& e) {
    handle->last_error = e.what();
    return CONVLAB_ERR_ORACLE;
  } catch (const std::exception& e) {
    handle->last_error = e.what();
    return CONVLAB_ERR_CONFIG;
  }
}

std::string as_string(const char* s) { return s ? s : ""; }

} // namespace

extern "C" {

const char* convlab_version(void) { return "convlab 1.0.0"; }

convlab_config* convlab_config_create(void) { return new convlab_config; }

void convlab_config_destroy(convlab_config* cfg) { delete cfg; }

convlab_status convlab_config_load_file(convlab_config* cfg,
                                        const char* path) {
  return guarded(cfg, [&] {
    cfg->cfg = convlab::load_config_file(as_string(path));
  });
}

convlab_status convlab_config_set(convlab_config* cfg, const char* key,
                                  const char* value) {
  return guarded(cfg, [&] {
    convlab::apply_key(cfg->cfg, as_string(key), as_string(value));
  });
}

const char* convlab_last_error(const convlab_config* cfg) {
  return cfg ? cfg->last_error.c_str() : "null configuration handle";
}

convlab_status convlab_run(convlab_config* cfg, const char* out_csv) {
  return guarded(cfg, [&] { convlab::do_run(cfg->cfg, as_string(out_csv)); });
}

convlab_status convlab_converge(convlab_config* cfg, const char* out_csv) {
  return guarded(cfg,
                 [&] { convlab::do_converge(cfg->cfg, as_string(out_csv)); });
}

convlab_status convlab_compare(convlab_config* cfg,
                               const char* out_solution_csv,
                               const char* out_error_csv) {
  return guarded(cfg, [&] {
    convlab::compare_schemes(cfg->cfg, as_string(out_solution_csv),
                             as_string(out_error_csv));
  });
}

convlab_status convlab_reference(convlab_config* cfg, const char* out_csv) {
  return guarded(cfg,
                 [&] { convlab::do_reference(cfg->cfg, as_string(out_csv)); });
}

} // extern "C"
