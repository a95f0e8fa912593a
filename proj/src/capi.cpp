#include "rnndcor.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "rnndcor/config.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/estat.hpp"
#include "rnndcor/experiment.hpp"
#include "rnndcor/tsgen.hpp"

using namespace rnndcor;

struct rd_series {
    tsgen::TimeSeries series;
};

namespace {

thread_local std::string g_last_error;

rd_status status_from(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Argument: return RD_ERR_ARGUMENT;
    case ErrorKind::Data: return RD_ERR_DATA;
    case ErrorKind::Io: return RD_ERR_IO;
    case ErrorKind::Numeric: return RD_ERR_NUMERIC;
    case ErrorKind::Internal: return RD_ERR_INTERNAL;
    }
    return RD_ERR_INTERNAL;
}

template <typename Fn> rd_status guarded(Fn &&fn) {
    try {
        g_last_error.clear();
        fn();
        return RD_OK;
    } catch (const Error &e) {
        g_last_error = e.what();
        return status_from(e.kind());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return RD_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return RD_ERR_INTERNAL;
    }
}

char *copy_string(const std::string &text) {
    char *out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

Matrix matrix_from_buffer(const double *data, std::size_t d, std::size_t n,
                          const char *what) {
    if (!data || d == 0 || n == 0) {
        throw ConfigError(std::string(what) + ": null or empty buffer");
    }
    Matrix m(d, n);
    std::memcpy(m.data(), data, d * n * sizeof(double));
    return m;
}

exp::ExperimentConfig experiment_config_from(const char *config_json) {
    if (!config_json) throw ConfigError("config_json is null");
    return exp::parse_json_text(config_json, "config")
        .get<exp::ExperimentConfig>();
}

} // namespace

extern "C" {

const char *rd_version(void) { return "1.0.0"; }

const char *rd_last_error(void) { return g_last_error.c_str(); }

void rd_string_free(char *s) { delete[] s; }

rd_status rd_series_generate(const char *process_json, rd_series **out) {
    return guarded([&] {
        if (!process_json || !out) {
            throw ConfigError("rd_series_generate: null argument");
        }
        auto spec = exp::parse_json_text(process_json, "process spec")
                        .get<exp::ProcessSpec>();
        auto holder = std::make_unique<rd_series>();
        holder->series = spec.generate(spec.noise.seed);
        *out = holder.release();
    });
}

rd_status rd_series_load_csv(const char *path, const char *options_json,
                             rd_series **out) {
    return guarded([&] {
        if (!path || !out) {
            throw ConfigError("rd_series_load_csv: null argument");
        }
        tsgen::CsvOptions options;
        if (options_json && *options_json) {
            const auto doc =
                exp::parse_json_text(options_json, "CSV options");
            options.column = doc.value("column", options.column);
            const std::string delim = doc.value("delimiter", std::string(","));
            options.delimiter = delim.empty() ? ',' : delim[0];
            options.has_header = doc.value("has_header", options.has_header);
            options.row_begin = doc.value("row_begin", options.row_begin);
            options.row_end = doc.value("row_end", options.row_end);
        }
        auto holder = std::make_unique<rd_series>();
        holder->series = tsgen::load_csv(path, options);
        *out = holder.release();
    });
}

rd_status rd_series_save_csv(const rd_series *series, const char *path,
                             int with_header) {
    return guarded([&] {
        if (!series || !path) {
            throw ConfigError("rd_series_save_csv: null argument");
        }
        tsgen::save_csv(series->series, path, with_header != 0);
    });
}

size_t rd_series_length(const rd_series *series) {
    return series ? series->series.length() : 0;
}

size_t rd_series_values(const rd_series *series, double *buf,
                        size_t capacity) {
    if (!series || !buf) return 0;
    const size_t count = std::min(capacity, series->series.length());
    std::memcpy(buf, series->series.values.data(), count * sizeof(double));
    return count;
}

rd_status rd_series_params_json(const rd_series *series, char **out_json) {
    return guarded([&] {
        if (!series || !out_json) {
            throw ConfigError("rd_series_params_json: null argument");
        }
        nlohmann::json doc = series->series.params;
        doc["origin"] = tsgen::origin_name(series->series.origin);
        doc["seed"] = series->series.seed;
        doc["rows"] = series->series.length();
        *out_json = copy_string(doc.dump());
    });
}

void rd_series_free(rd_series *series) { delete series; }

rd_status rd_acf(const double *values, size_t length, size_t max_lag,
                 double *out) {
    return guarded([&] {
        if (!values || !out) throw ConfigError("rd_acf: null argument");
        const auto acf =
            estat::acf(std::span<const double>(values, length), max_lag);
        std::memcpy(out, acf.data(), acf.size() * sizeof(double));
    });
}

double rd_acf_significance_band(size_t length) {
    if (length < 2) return -1.0;
    return estat::acf_significance_band(length);
}

rd_status rd_dcor(const double *x, size_t dx, const double *y, size_t dy,
                  size_t n, double *out) {
    return guarded([&] {
        if (!out) throw ConfigError("rd_dcor: null output");
        *out = estat::dcor(matrix_from_buffer(x, dx, n, "rd_dcor x"),
                           matrix_from_buffer(y, dy, n, "rd_dcor y"));
    });
}

rd_status rd_dcor_squared(const double *x, size_t dx, const double *y,
                          size_t dy, size_t n, double *out) {
    return guarded([&] {
        if (!out) throw ConfigError("rd_dcor_squared: null output");
        *out = estat::dcor_squared(
            matrix_from_buffer(x, dx, n, "rd_dcor_squared x"),
            matrix_from_buffer(y, dy, n, "rd_dcor_squared y"));
    });
}

rd_status rd_cmd_generate(const char *config_json, char **result_json) {
    return guarded([&] {
        const auto result = exp::cmd_generate(experiment_config_from(config_json));
        if (result_json) *result_json = copy_string(result.dump());
    });
}

rd_status rd_cmd_run(const char *config_json, char **result_json) {
    return guarded([&] {
        const auto result = exp::cmd_run(experiment_config_from(config_json));
        if (result_json) *result_json = copy_string(result.dump());
    });
}

rd_status rd_cmd_simulate(const char *config_json, char **result_json) {
    return guarded([&] {
        const auto result =
            exp::cmd_simulate(experiment_config_from(config_json));
        if (result_json) *result_json = copy_string(result.dump());
    });
}

rd_status rd_cmd_heatmap(const char *config_json, char **result_json) {
    return guarded([&] {
        if (!config_json) throw ConfigError("config_json is null");
        const auto config = exp::parse_json_text(config_json, "config")
                                .get<exp::HeatmapConfig>();
        const auto result = exp::cmd_heatmap(config);
        if (result_json) *result_json = copy_string(result.dump());
    });
}

rd_status rd_cmd_sweep(const char *config_json, char **result_json) {
    return guarded([&] {
        if (!config_json) throw ConfigError("config_json is null");
        const auto config = exp::parse_json_text(config_json, "config")
                                .get<exp::SweepConfig>();
        const auto result = exp::cmd_sweep(config);
        if (result_json) *result_json = copy_string(result.dump());
    });
}

rd_status rd_cmd_report(const char *summary_path, const char *output_dir,
                        char **result_json) {
    return guarded([&] {
        if (!summary_path) throw ConfigError("summary_path is null");
        const auto result = exp::cmd_report(
            summary_path, output_dir ? output_dir : std::string());
        if (result_json) *result_json = copy_string(result.dump());
    });
}

} // extern "C"
