#ifndef RNNDCOR_H
#define RNNDCOR_H

/*
 * C API for the rnndcor shared library.
 *
 * Conventions:
 *   - Functions return RD_OK (0) on success or an rd_status code; the
 *     message for the most recent failure on the calling thread is
 *     available from rd_last_error().
 *   - Objects behind opaque handles are created by rd_*_… constructors
 *     and released with the matching rd_*_free().
 *   - Strings returned through char** are heap-allocated; release them
 *     with rd_string_free().
 *   - Matrices passed as flat buffers are column-major: column i of a
 *     d x n matrix occupies buf[i*d .. i*d + d - 1].
 *   - Experiment entry points take the same JSON configuration documents
 *     the CLI uses and write their artifacts to config["output_dir"].
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
    RD_OK = 0,
    RD_ERR_ARGUMENT = 1, /* invalid parameters or configuration */
    RD_ERR_DATA = 2,     /* unusable input data */
    RD_ERR_IO = 3,       /* file system failure */
    RD_ERR_NUMERIC = 4,  /* numerical instability or divergence */
    RD_ERR_INTERNAL = 5,
} rd_status;

const char *rd_version(void);

/* Message for the calling thread's most recent failure ("" when none). */
const char *rd_last_error(void);

void rd_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Time series                                                         */

typedef struct rd_series rd_series;

/*
 * process_json examples:
 *   {"type":"ar","ar_coeffs":[0.99],"length":4000,"burn_in":500,
 *    "noise":{"mean":0,"std":1,"seed":7}}
 *   {"type":"garch","alpha":[0.2,0.1],"beta":[0.3,0.2],"alpha0":0.1,...}
 * Empty coefficient lists plus "order" use the built-in defaults.
 */
rd_status rd_series_generate(const char *process_json, rd_series **out);

/* options_json (all optional): {"column":0,"delimiter":",",
 * "has_header":false,"row_begin":0,"row_end":0} */
rd_status rd_series_load_csv(const char *path, const char *options_json,
                             rd_series **out);

rd_status rd_series_save_csv(const rd_series *series, const char *path,
                             int with_header);

size_t rd_series_length(const rd_series *series);

/* Copies min(length, capacity) values into buf, returns the count. */
size_t rd_series_values(const rd_series *series, double *buf,
                        size_t capacity);

/* Full parameter record (origin, coefficients, seed, ...) as JSON. */
rd_status rd_series_params_json(const rd_series *series, char **out_json);

void rd_series_free(rd_series *series);

/* ------------------------------------------------------------------ */
/* Energy statistics                                                   */

/* out must hold max_lag + 1 values; out[h] is the ACF at lag h
 * (out[0] = 1). */
rd_status rd_acf(const double *values, size_t length, size_t max_lag,
                 double *out);

/* 1.96 / sqrt(length); returns a negative value when length < 2. */
double rd_acf_significance_band(size_t length);

/* Empirical distance correlation between x (dx x n) and y (dy x n). */
rd_status rd_dcor(const double *x, size_t dx, const double *y, size_t dy,
                  size_t n, double *out);

rd_status rd_dcor_squared(const double *x, size_t dx, const double *y,
                          size_t dy, size_t n, double *out);

/* ------------------------------------------------------------------ */
/* Experiment drivers (one per CLI subcommand)                         */

rd_status rd_cmd_generate(const char *config_json, char **result_json);
rd_status rd_cmd_run(const char *config_json, char **result_json);
rd_status rd_cmd_simulate(const char *config_json, char **result_json);
rd_status rd_cmd_heatmap(const char *config_json, char **result_json);
rd_status rd_cmd_sweep(const char *config_json, char **result_json);

/* Re-render charts from an existing run/aggregate JSON document. */
rd_status rd_cmd_report(const char *summary_path, const char *output_dir,
                        char **result_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RNNDCOR_H */
