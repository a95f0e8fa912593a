#include "rnndcor/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/estat.hpp"
#include "rnndcor/svg.hpp"

namespace rnndcor::exp {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kSeriesStream = 10;
constexpr std::uint64_t kModelStream = 11;
constexpr std::uint64_t kSubsampleStream = 12;

std::string out_dir(const std::string &configured) {
    std::string dir = configured.empty() ? default_output_dir() : configured;
    fs::create_directories(dir);
    return dir;
}

std::string join(const std::string &dir, const std::string &name) {
    return (fs::path(dir) / name).string();
}

std::size_t worker_count(std::size_t configured, std::size_t jobs) {
    std::size_t n = configured > 0
                        ? configured
                        : std::max<unsigned>(1, std::thread::hardware_concurrency());
    return std::min(n, jobs);
}

void write_json(const std::string &path, const nlohmann::json &doc) {
    csvio::write_text_file(path, doc.dump(2) + "\n");
}

nlohmann::json profile_to_json(const analysis::DcorProfile &profile) {
    return {{"values", profile.values},
            {"dataset", profile.dataset_tag},
            {"epoch", profile.epoch},
            {"acf_lags", profile.acf_lags},
            {"acf_values", profile.acf_values}};
}

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

nlohmann::json summary_to_json(const analysis::RunSummary &summary,
                               int report_precision) {
    return {{"seed", summary.seed},
            {"mse", summary.mse},
            {"mape", summary.mape},
            {"mape_skipped", summary.mape_skipped},
            {"max_r", summary.max_r},
            {"final_r", summary.final_r},
            {"info_loss_pct_raw", summary.info_loss_pct},
            {"info_loss_pct",
             round_to(summary.info_loss_pct, report_precision)},
            {"subsampled", summary.subsampled},
            {"profile", profile_to_json(summary.profile)}};
}

std::string profile_csv(const analysis::DcorProfile &profile) {
    std::ostringstream text;
    text << "layer,dcor,acf_lag,acf\n";
    for (std::size_t t = 0; t < profile.values.size(); ++t) {
        text << (t + 1) << "," << csvio::format_double(profile.values[t])
             << "," << profile.acf_lags[t] << ","
             << csvio::format_double(profile.acf_values[t]) << "\n";
    }
    return text.str();
}

std::string mean_profile_csv(const analysis::AggregateSummary &agg,
                             std::size_t layers) {
    std::ostringstream text;
    text << "layer,dcor,acf_lag,acf\n";
    for (std::size_t t = 0; t < layers; ++t) {
        text << (t + 1) << "," << csvio::format_double(agg.mean_profile[t])
             << "," << (layers - t) << ","
             << csvio::format_double(t < agg.mean_acf.size() ? agg.mean_acf[t]
                                                             : 0.0)
             << "\n";
    }
    return text.str();
}

std::string forecast_csv(const std::vector<double> &actual,
                         const std::vector<double> &predicted) {
    std::ostringstream text;
    text << "index,actual,predicted\n";
    for (std::size_t i = 0; i < actual.size(); ++i) {
        text << i << "," << csvio::format_double(actual[i]) << ","
             << csvio::format_double(predicted[i]) << "\n";
    }
    return text.str();
}

std::string grid_csv(const Matrix &grid) {
    std::ostringstream text;
    text << "layer";
    for (std::size_t m = 1; m <= grid.cols(); ++m) text << "," << m;
    text << "\n";
    for (std::size_t v = 0; v < grid.rows(); ++v) {
        text << (v + 1);
        for (std::size_t m = 0; m < grid.cols(); ++m) {
            text << "," << csvio::format_double(grid(v, m));
        }
        text << "\n";
    }
    return text.str();
}

std::string table_csv_header() {
    return "process,runs,mse_mean,mse_std,mape_mean,mape_std,max_r,final_r,"
           "change_pct\n";
}

std::string table_csv_row(const std::string &process_name,
                          const analysis::AggregateSummary &agg,
                          int report_precision) {
    std::ostringstream text;
    text << process_name << "," << agg.run_count << ","
         << csvio::format_double(agg.mse.mean) << ","
         << csvio::format_double(agg.mse.std) << ","
         << csvio::format_double(agg.mape.mean) << ","
         << csvio::format_double(agg.mape.std) << ","
         << csvio::format_double(agg.max_r.mean) << ","
         << csvio::format_double(agg.final_r.mean) << ","
         << csvio::format_double(round_to(agg.info_loss_pct.mean,
                                          report_precision))
         << "\n";
    return text.str();
}

// Deterministic subsample of column indices: seeded shuffle, first `cap`,
// restored to ascending order.
std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t cap,
                                           std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.shuffle(idx);
    idx.resize(cap);
    std::sort(idx.begin(), idx.end());
    return idx;
}

rnn::ActivationTensor
select_tensor_columns(const rnn::ActivationTensor &tensor,
                      const std::vector<std::size_t> &indices) {
    rnn::ActivationTensor out;
    out.epoch = tensor.epoch;
    out.dataset_tag = tensor.dataset_tag;
    out.layers.reserve(tensor.layers.size());
    for (const Matrix &layer : tensor.layers) {
        Matrix picked(layer.rows(), indices.size());
        for (std::size_t j = 0; j < indices.size(); ++j) {
            std::copy(layer.col(indices[j]), layer.col(indices[j]) + layer.rows(),
                      picked.col(j));
        }
        out.layers.push_back(std::move(picked));
    }
    return out;
}

struct PreparedData {
    pipeline::StandardizedSeries standardized;
    pipeline::Range train_range;
    pipeline::Range test_range;
    pipeline::SampleSet train_samples;
    pipeline::SampleSet test_samples;
};

PreparedData prepare(const tsgen::TimeSeries &series, double split_ratio,
                     bool standardize_on_full, std::size_t T, std::size_t H) {
    PreparedData data;
    const std::size_t L = series.length();
    auto [train_range, test_range] = pipeline::split(L, split_ratio, T + H);
    data.train_range = train_range;
    data.test_range = test_range;

    const pipeline::Range fit =
        standardize_on_full ? pipeline::Range{0, L} : train_range;
    data.standardized = pipeline::standardize(series.values, fit);

    const std::span<const double> values(data.standardized.values);
    data.train_samples =
        pipeline::make_samples(values.subspan(train_range.begin,
                                              train_range.length()),
                               T, H, train_range.begin);
    data.test_samples =
        pipeline::make_samples(values.subspan(test_range.begin,
                                              test_range.length()),
                               T, H, test_range.begin);
    return data;
}

} // namespace

RunResult run_single(const ExperimentConfig &config, std::uint64_t run_seed) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    const tsgen::TimeSeries series =
        config.process.generate(derive_seed(run_seed, kSeriesStream));
    PreparedData data =
        prepare(series, config.split_ratio, config.standardize_on_full,
                config.net.window, config.net.horizon);

    rnn::RnnConfig net = config.net;
    net.seed = derive_seed(run_seed, kModelStream);
    const rnn::TrainReport report = rnn::train(net, data.train_samples);

    const Matrix predictions =
        rnn::predict(report.model, data.test_samples.X);
    const analysis::Metrics metrics =
        analysis::eval_metrics(predictions, data.test_samples.Y);

    const bool on_train = config.profile_on == "train";
    const pipeline::SampleSet &profile_samples =
        on_train ? data.train_samples : data.test_samples;
    rnn::ActivationTensor acts = rnn::capture_activations(
        report.model, profile_samples, config.net.epochs,
        on_train ? "train" : "test");

    Matrix profile_targets = profile_samples.Y;
    bool subsampled = false;
    if (config.subsample_cap > 0 && profile_samples.n > config.subsample_cap) {
        const auto indices =
            subsample_indices(profile_samples.n, config.subsample_cap,
                              derive_seed(run_seed, kSubsampleStream));
        acts = select_tensor_columns(acts, indices);
        Matrix picked(profile_targets.rows(), indices.size());
        for (std::size_t j = 0; j < indices.size(); ++j) {
            std::copy(profile_targets.col(indices[j]),
                      profile_targets.col(indices[j]) + profile_targets.rows(),
                      picked.col(j));
        }
        profile_targets = std::move(picked);
        subsampled = true;
    }

    RunResult result;
    result.summary.profile = analysis::layer_profile(acts, profile_targets);
    result.acf =
        estat::acf(data.standardized.values, config.net.window);
    analysis::attach_acf(result.summary.profile, result.acf);

    result.summary.mse = metrics.mse;
    result.summary.mape = metrics.mape;
    result.summary.mape_skipped = metrics.mape_skipped;
    result.summary.max_r = *std::max_element(
        result.summary.profile.values.begin(),
        result.summary.profile.values.end());
    result.summary.final_r = result.summary.profile.values.back();
    result.summary.info_loss_pct = analysis::info_loss(result.summary.profile);
    result.summary.seed = run_seed;
    result.summary.subsampled = subsampled;

    // First-horizon forecast overlay in the original scale.
    std::vector<double> actual(data.test_samples.n);
    std::vector<double> predicted(data.test_samples.n);
    for (std::size_t i = 0; i < data.test_samples.n; ++i) {
        actual[i] = data.test_samples.Y(0, i);
        predicted[i] = predictions(0, i);
    }
    result.test_actual = analysis::destandardize_predictions(
        actual, data.standardized.mean, data.standardized.std);
    result.test_predicted = analysis::destandardize_predictions(
        predicted, data.standardized.mean, data.standardized.std);

    result.model = report.model;
    result.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

nlohmann::json cmd_generate(const ExperimentConfig &config) {
    const std::string dir = out_dir(config.output_dir);
    const tsgen::TimeSeries series =
        config.process.generate(config.base_seed);

    const std::string csv_path = join(dir, "series.csv");
    tsgen::save_csv(series, csv_path, true);

    nlohmann::json sidecar = {{"command", "generate"},
                              {"origin", tsgen::origin_name(series.origin)},
                              {"seed", series.seed},
                              {"rows", series.length()},
                              {"params", series.params},
                              {"config", config}};
    const std::string sidecar_path = join(dir, "series.json");
    write_json(sidecar_path, sidecar);

    sidecar["files"] = {{"series_csv", csv_path},
                        {"sidecar_json", sidecar_path}};
    return sidecar;
}

nlohmann::json cmd_run(const ExperimentConfig &config) {
    const std::string dir = out_dir(config.output_dir);
    const RunResult result = run_single(config, config.base_seed);

    nlohmann::json doc = {
        {"command", "run"},
        {"config", config},
        {"process", config.process.display_name()},
        {"run_seed", config.base_seed},
        {"summary", summary_to_json(result.summary, config.report_precision)},
        {"wall_clock_seconds", result.wall_clock_seconds}};

    write_json(join(dir, "run_summary.json"), doc);
    csvio::write_text_file(join(dir, "profile.csv"),
                           profile_csv(result.summary.profile));
    csvio::write_text_file(
        join(dir, "forecast.csv"),
        forecast_csv(result.test_actual, result.test_predicted));
    rnn::save_model(result.model, join(dir, "model.json"));

    std::vector<std::string> caption = {
        config.process.display_name() + "  seed " +
            std::to_string(config.base_seed),
        "MSE " + csvio::format_fixed(result.summary.mse, 4) + "  MAPE " +
            csvio::format_fixed(result.summary.mape, 4),
        "max r " + csvio::format_fixed(result.summary.max_r, 3) +
            "  final r " + csvio::format_fixed(result.summary.final_r, 3) +
            "  info loss " +
            csvio::format_fixed(result.summary.info_loss_pct, 1) + "%"};
    const svg::SvgChart bars = svg::render_bar_chart(
        result.summary.profile.values, result.summary.profile.acf_values,
        result.summary.profile.acf_lags, caption);
    csvio::write_text_file(join(dir, "profile_chart.svg"), bars.xml);

    const svg::SvgChart overlay = svg::render_forecast_overlay(
        result.test_actual, result.test_predicted, caption);
    csvio::write_text_file(join(dir, "forecast_chart.svg"), overlay.xml);

    return doc;
}

nlohmann::json cmd_simulate(const ExperimentConfig &config) {
    config.validate();
    const std::string dir = out_dir(config.output_dir);
    const std::size_t runs = config.runs;

    struct Slot {
        bool ok = false;
        analysis::RunSummary summary;
        std::string error;
        double wall_clock = 0.0;
    };
    std::vector<Slot> slots(runs);

    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&]() {
        while (true) {
            std::size_t index;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= runs) return;
                index = next++;
            }
            try {
                RunResult result =
                    run_single(config, config.base_seed + index);
                slots[index].summary = std::move(result.summary);
                slots[index].wall_clock = result.wall_clock_seconds;
                slots[index].ok = true;
            } catch (const std::exception &e) {
                slots[index].error = e.what();
            }
        }
    };

    const std::size_t nthreads = worker_count(config.threads, runs);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();

    std::vector<analysis::RunSummary> summaries;
    nlohmann::json failures = nlohmann::json::array();
    double total_wall = 0.0;
    for (std::size_t i = 0; i < runs; ++i) {
        if (slots[i].ok) {
            summaries.push_back(std::move(slots[i].summary));
            total_wall += slots[i].wall_clock;
        } else {
            failures.push_back({{"run_index", i},
                                {"seed", config.base_seed + i},
                                {"error", slots[i].error}});
        }
    }
    if (summaries.size() * 5 < runs * 4) { // < 80% succeeded
        throw Error(ErrorKind::Numeric,
                    "only " + std::to_string(summaries.size()) + " of " +
                        std::to_string(runs) +
                        " runs succeeded (threshold 80%); first error: " +
                        (failures.empty()
                             ? std::string("none")
                             : failures[0]["error"].get<std::string>()));
    }

    const analysis::AggregateSummary agg = analysis::aggregate(summaries);

    nlohmann::json runs_json = nlohmann::json::array();
    for (const auto &s : summaries) {
        runs_json.push_back(summary_to_json(s, config.report_precision));
    }
    nlohmann::json doc = {
        {"command", "simulate"},
        {"config", config},
        {"process", config.process.display_name()},
        {"runs", runs_json},
        {"failures", failures},
        {"aggregate",
         {{"run_count", agg.run_count},
          {"mse", {{"mean", agg.mse.mean}, {"std", agg.mse.std}}},
          {"mape", {{"mean", agg.mape.mean}, {"std", agg.mape.std}}},
          {"max_r", {{"mean", agg.max_r.mean}, {"std", agg.max_r.std}}},
          {"final_r", {{"mean", agg.final_r.mean}, {"std", agg.final_r.std}}},
          {"info_loss_pct",
           {{"mean", agg.info_loss_pct.mean},
            {"std", agg.info_loss_pct.std},
            {"mean_rounded",
             round_to(agg.info_loss_pct.mean, config.report_precision)}}},
          {"mean_profile", agg.mean_profile},
          {"mean_acf", agg.mean_acf}}},
        {"wall_clock_seconds", total_wall}};

    write_json(join(dir, "aggregate.json"), doc);
    csvio::write_text_file(join(dir, "table.csv"),
                           table_csv_header() +
                               table_csv_row(config.process.display_name(),
                                             agg, config.report_precision));
    csvio::write_text_file(join(dir, "mean_profile.csv"),
                           mean_profile_csv(agg, config.net.window));

    std::vector<std::size_t> lags(config.net.window);
    for (std::size_t t = 0; t < lags.size(); ++t) {
        lags[t] = config.net.window - t;
    }
    std::vector<std::string> caption = {
        config.process.display_name() + "  mean over " +
            std::to_string(agg.run_count) + " runs",
        "MSE " + csvio::format_fixed(agg.mse.mean, 4) + " +/- " +
            csvio::format_fixed(agg.mse.std, 4),
        "max r " + csvio::format_fixed(agg.max_r.mean, 3) + "  final r " +
            csvio::format_fixed(agg.final_r.mean, 3) + "  info loss " +
            csvio::format_fixed(agg.info_loss_pct.mean, 1) + "%"};
    const svg::SvgChart chart = svg::render_bar_chart(
        agg.mean_profile, agg.mean_acf, lags, caption);
    csvio::write_text_file(join(dir, "mean_profile_chart.svg"), chart.xml);

    return doc;
}

nlohmann::json cmd_heatmap(const HeatmapConfig &config) {
    const std::string dir = out_dir(config.output_dir);
    const std::size_t T_max =
        std::max(config.net_a.window, config.net_b.window);
    const std::size_t H = config.net_a.horizon;
    if (H != config.net_b.horizon) {
        throw ConfigError("heatmap models must share the horizon");
    }

    const tsgen::TimeSeries series =
        config.process.generate(derive_seed(config.base_seed, kSeriesStream));
    // One shared standardization/split; each model windows it with its
    // own T.
    PreparedData wide = prepare(series, config.split_ratio,
                                config.standardize_on_full, T_max, H);

    auto build_side = [&](const rnn::RnnConfig &net_in, bool seed_set,
                          std::uint64_t default_stream) {
        rnn::RnnConfig net = net_in;
        if (!seed_set) {
            net.seed = derive_seed(config.base_seed, default_stream);
        }
        const std::span<const double> values(wide.standardized.values);
        pipeline::SampleSet train = pipeline::make_samples(
            values.subspan(wide.train_range.begin, wide.train_range.length()),
            net.window, H, wide.train_range.begin);
        pipeline::SampleSet test = pipeline::make_samples(
            values.subspan(wide.test_range.begin, wide.test_range.length()),
            net.window, H, wide.test_range.begin);
        rnn::TrainReport report = rnn::train(net, train);
        return std::tuple<rnn::RnnModel, pipeline::SampleSet,
                          pipeline::SampleSet>(std::move(report.model),
                                               std::move(train),
                                               std::move(test));
    };

    auto [model_a, train_a, test_a] =
        build_side(config.net_a, config.net_a_seed_set, kModelStream + 10);
    auto [model_b, train_b, test_b] =
        build_side(config.net_b, config.net_b_seed_set, kModelStream + 11);

    const analysis::Metrics metrics_a = analysis::eval_metrics(
        rnn::predict(model_a, test_a.X), test_a.Y);
    const analysis::Metrics metrics_b = analysis::eval_metrics(
        rnn::predict(model_b, test_b.X), test_b.Y);

    auto [pick_a, pick_b] = analysis::align_windows(test_a, test_b);
    pipeline::SampleSet aligned_a = analysis::select_samples(test_a, pick_a);
    pipeline::SampleSet aligned_b = analysis::select_samples(test_b, pick_b);

    std::vector<std::size_t> targets_a(aligned_a.n), targets_b(aligned_b.n);
    for (std::size_t i = 0; i < aligned_a.n; ++i) {
        targets_a[i] = aligned_a.target_index(i);
        targets_b[i] = aligned_b.target_index(i);
    }

    rnn::ActivationTensor acts_a = rnn::capture_activations(
        model_a, aligned_a, config.net_a.epochs, "test");
    rnn::ActivationTensor acts_b = rnn::capture_activations(
        model_b, aligned_b, config.net_b.epochs, "test");

    if (config.subsample_cap > 0 && aligned_a.n > config.subsample_cap) {
        const auto indices = subsample_indices(
            aligned_a.n, config.subsample_cap,
            derive_seed(config.base_seed, kSubsampleStream));
        acts_a = select_tensor_columns(acts_a, indices);
        acts_b = select_tensor_columns(acts_b, indices);
        std::vector<std::size_t> kept_a, kept_b;
        for (std::size_t i : indices) {
            kept_a.push_back(targets_a[i]);
            kept_b.push_back(targets_b[i]);
        }
        targets_a = std::move(kept_a);
        targets_b = std::move(kept_b);
    }

    analysis::HeatmapGrid grid =
        analysis::cross_model_grid(acts_a, acts_b, targets_a, targets_b);
    const std::string label_a =
        "model A (T=" + std::to_string(config.net_a.window) + ")";
    const std::string label_b =
        "model B (T=" + std::to_string(config.net_b.window) + ")";
    grid.model1 = label_a;
    grid.model2 = label_b;

    csvio::write_text_file(join(dir, "grid.csv"), grid_csv(grid.grid));

    std::vector<std::string> caption = {
        config.process.display_name() + "  seed " +
            std::to_string(config.base_seed) + "  aligned n " +
            std::to_string(acts_a.samples()),
        label_a + ": MSE " + csvio::format_fixed(metrics_a.mse, 4) +
            "  MAPE " + csvio::format_fixed(metrics_a.mape, 4),
        label_b + ": MSE " + csvio::format_fixed(metrics_b.mse, 4) +
            "  MAPE " + csvio::format_fixed(metrics_b.mape, 4)};
    const svg::SvgChart chart =
        svg::render_heatmap(grid.grid, label_a, label_b, caption);
    csvio::write_text_file(join(dir, "heatmap.svg"), chart.xml);

    nlohmann::json doc = {
        {"command", "heatmap"},
        {"config", config},
        {"process", config.process.display_name()},
        {"aligned_samples", acts_a.samples()},
        {"model_a",
         {{"mse", metrics_a.mse},
          {"mape", metrics_a.mape},
          {"seed", model_a.config.seed}}},
        {"model_b",
         {{"mse", metrics_b.mse},
          {"mape", metrics_b.mape},
          {"seed", model_b.config.seed}}},
        {"grid_rows", grid.grid.rows()},
        {"grid_cols", grid.grid.cols()}};
    write_json(join(dir, "heatmap_summary.json"), doc);
    return doc;
}

nlohmann::json cmd_sweep(const SweepConfig &config) {
    config.base.validate();
    const std::string dir = out_dir(config.base.output_dir);

    // Cartesian product over the axes, in sorted-axis order.
    std::vector<std::string> axis_names;
    for (const auto &[axis, values] : config.axes) axis_names.push_back(axis);
    std::vector<std::map<std::string, nlohmann::json>> variants;
    variants.emplace_back();
    for (const std::string &axis : axis_names) {
        std::vector<std::map<std::string, nlohmann::json>> expanded;
        for (const auto &variant : variants) {
            for (const auto &value : config.axes.at(axis)) {
                auto next = variant;
                next[axis] = value;
                expanded.push_back(std::move(next));
            }
        }
        variants = std::move(expanded);
    }

    std::ostringstream table;
    table << "variant," << table_csv_header();
    nlohmann::json variants_json = nlohmann::json::array();

    for (std::size_t k = 0; k < variants.size(); ++k) {
        nlohmann::json base_json = config.base;
        std::string variant_name;
        for (const auto &[axis, value] : variants[k]) {
            base_json["rnn"][axis] = value;
            if (!variant_name.empty()) variant_name += "_";
            variant_name += axis + "=" +
                            (value.is_string() ? value.get<std::string>()
                                               : value.dump());
        }
        if (variant_name.empty()) variant_name = "base";
        ExperimentConfig variant_config =
            base_json.get<ExperimentConfig>();
        variant_config.output_dir = join(dir, "variant_" + std::to_string(k));

        nlohmann::json entry = {{"variant", variant_name},
                                {"overrides", variants[k]},
                                {"output_dir", variant_config.output_dir}};
        try {
            nlohmann::json result = cmd_simulate(variant_config);
            entry["ok"] = true;
            entry["aggregate"] = result["aggregate"];
            analysis::AggregateSummary agg;
            agg.run_count = result["aggregate"]["run_count"].get<std::size_t>();
            agg.mse.mean = result["aggregate"]["mse"]["mean"].get<double>();
            agg.mse.std = result["aggregate"]["mse"]["std"].get<double>();
            agg.mape.mean = result["aggregate"]["mape"]["mean"].get<double>();
            agg.mape.std = result["aggregate"]["mape"]["std"].get<double>();
            agg.max_r.mean = result["aggregate"]["max_r"]["mean"].get<double>();
            agg.final_r.mean =
                result["aggregate"]["final_r"]["mean"].get<double>();
            agg.info_loss_pct.mean =
                result["aggregate"]["info_loss_pct"]["mean"].get<double>();
            table << variant_name << ","
                  << table_csv_row(variant_config.process.display_name(), agg,
                                   variant_config.report_precision);
        } catch (const std::exception &e) {
            entry["ok"] = false;
            entry["error"] = e.what();
        }
        variants_json.push_back(std::move(entry));
    }

    csvio::write_text_file(join(dir, "sweep.csv"), table.str());
    nlohmann::json doc = {{"command", "sweep"},
                          {"config", config},
                          {"variants", variants_json}};
    write_json(join(dir, "sweep_summary.json"), doc);
    return doc;
}

nlohmann::json cmd_report(const std::string &summary_path,
                          const std::string &output_dir) {
    const nlohmann::json doc = parse_json_text(
        csvio::read_text_file(summary_path), summary_path);
    const std::string dir = out_dir(output_dir);
    const std::string command = doc.value("command", std::string());

    if (command == "run") {
        const auto &profile = doc.at("summary").at("profile");
        const auto values = profile.at("values").get<std::vector<double>>();
        const auto acf_values =
            profile.at("acf_values").get<std::vector<double>>();
        const auto acf_lags =
            profile.at("acf_lags").get<std::vector<std::size_t>>();
        std::vector<std::string> caption = {
            doc.value("process", std::string("run")) + " (re-rendered)"};
        const svg::SvgChart chart =
            svg::render_bar_chart(values, acf_values, acf_lags, caption);
        csvio::write_text_file(join(dir, "profile_chart.svg"), chart.xml);
        return {{"command", "report"},
                {"source", summary_path},
                {"rendered", {"profile_chart.svg"}}};
    }
    if (command == "simulate") {
        const auto &agg = doc.at("aggregate");
        const auto values = agg.at("mean_profile").get<std::vector<double>>();
        const auto acf_values = agg.at("mean_acf").get<std::vector<double>>();
        std::vector<std::size_t> lags(values.size());
        for (std::size_t t = 0; t < lags.size(); ++t) {
            lags[t] = values.size() - t;
        }
        std::vector<std::string> caption = {
            doc.value("process", std::string("simulate")) + " (re-rendered)"};
        const svg::SvgChart chart =
            svg::render_bar_chart(values, acf_values, lags, caption);
        csvio::write_text_file(join(dir, "mean_profile_chart.svg"), chart.xml);
        return {{"command", "report"},
                {"source", summary_path},
                {"rendered", {"mean_profile_chart.svg"}}};
    }
    throw ConfigError("cannot report on document with command '" + command +
                      "'");
}

nlohmann::json strip_volatile(nlohmann::json doc) {
    if (doc.is_object()) {
        doc.erase("wall_clock_seconds");
        for (auto &[key, value] : doc.items()) {
            value = strip_volatile(value);
        }
    } else if (doc.is_array()) {
        for (auto &value : doc) value = strip_volatile(value);
    }
    return doc;
}

} // namespace rnndcor::exp
