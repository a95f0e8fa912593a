#ifndef RNNDCOR_EXPERIMENT_HPP
#define RNNDCOR_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rnndcor/analysis.hpp"
#include "rnndcor/config.hpp"

namespace rnndcor::exp {

/// Everything one training run produces, before artifact emission.
struct RunResult {
    analysis::RunSummary summary;
    std::vector<double> test_actual;    // destandardized first-horizon truth
    std::vector<double> test_predicted; // destandardized forecasts
    rnn::RnnModel model;
    std::vector<double> acf; // lags 0..T of the standardized series
    double wall_clock_seconds = 0.0;
};

/// generate -> standardize -> split -> window -> train -> capture ->
/// analyze, with run-scoped seeds derived from run_seed (streams: 10
/// series, 11 model weights/shuffle/dropout, 12 subsampling).
RunResult run_single(const ExperimentConfig &config, std::uint64_t run_seed);

/// Writes series.csv plus a series.json sidecar with the full parameter
/// record and seed. Returns the result document (paths + provenance).
nlohmann::json cmd_generate(const ExperimentConfig &config);

/// One run at base_seed: summary JSON, profile CSV, forecast CSV, model
/// checkpoint, profile/forecast SVG charts.
nlohmann::json cmd_run(const ExperimentConfig &config);

/// `runs` independent runs at seeds base_seed + index, executed on a
/// worker pool. Emits aggregate JSON, a Table-style CSV row, the mean
/// profile CSV and chart. Aborts unless at least 80% of runs succeed.
nlohmann::json cmd_simulate(const ExperimentConfig &config);

/// Two models on one shared series; windows aligned to identical
/// forecast targets; emits grid CSV + heatmap SVG + summary JSON.
nlohmann::json cmd_heatmap(const HeatmapConfig &config);

/// cmd_simulate per axis combination; per-variant failures are isolated.
/// Emits one combined CSV with a row per variant.
nlohmann::json cmd_sweep(const SweepConfig &config);

/// Re-render charts and table rows from an existing run/aggregate JSON.
nlohmann::json cmd_report(const std::string &summary_path,
                          const std::string &output_dir);

/// Strip volatile fields (wall-clock) for bit-exact comparisons.
nlohmann::json strip_volatile(nlohmann::json doc);

} // namespace rnndcor::exp

#endif
