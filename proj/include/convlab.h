/* convlab — 1D conservation-law solver laboratory, C API.
 *
 * All entry points operate on an opaque configuration handle and report
 * failures through status codes; a human-readable message for the last
 * failed call on a handle is available via convlab_last_error().
 */
#ifndef CONVLAB_H
#define CONVLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CONVLAB_OK = 0,
  CONVLAB_ERR_CONFIG = 2,    /* invalid configuration or arguments */
  CONVLAB_ERR_NUMERICAL = 3, /* solver blow-up or positivity loss */
  CONVLAB_ERR_ORACLE = 4     /* reference solution failed to converge */
} convlab_status;

typedef struct convlab_config convlab_config;

const char* convlab_version(void);

convlab_config* convlab_config_create(void);
void convlab_config_destroy(convlab_config* cfg);

/* Loads a flat `key = value` config file, replacing the current state. */
convlab_status convlab_config_load_file(convlab_config* cfg, const char* path);

/* Sets one configuration key; unknown keys are rejected. */
convlab_status convlab_config_set(convlab_config* cfg, const char* key,
                                  const char* value);

/* Message of the most recent failure on this handle ("" if none). */
const char* convlab_last_error(const convlab_config* cfg);

/* Single simulation; writes x,<components>[,<components>_ref] CSV. */
convlab_status convlab_run(convlab_config* cfg, const char* out_csv);

/* Grid-refinement study; writes N,L1,p1,L2,p2,Linf,pinf CSV. */
convlab_status convlab_converge(convlab_config* cfg, const char* out_csv);

/* Multi-scheme comparison; writes merged solution and absolute-error
 * CSVs (either path may be NULL to skip). */
convlab_status convlab_compare(convlab_config* cfg,
                               const char* out_solution_csv,
                               const char* out_error_csv);

/* Generates (and caches, where applicable) the reference solution. */
convlab_status convlab_reference(convlab_config* cfg, const char* out_csv);

#ifdef __cplusplus
}
#endif

#endif /* CONVLAB_H */
