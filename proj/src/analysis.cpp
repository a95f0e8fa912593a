#include "rnndcor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rnndcor/errors.hpp"

namespace rnndcor::analysis {

namespace {

constexpr double kMapeThreshold = 1e-8;

MeanStd mean_std(const std::vector<double> &values) {
    MeanStd out;
    const std::size_t n = values.size();
    if (n == 0) return out;
    // Identical runs must aggregate to an exact zero spread.
    const bool all_equal =
        std::all_of(values.begin(), values.end(),
                    [&](double v) { return v == values.front(); });
    if (all_equal) {
        out.mean = values.front();
        return out;
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double acc = 0.0;
        for (double v : values) {
            const double d = v - out.mean;
            acc += d * d;
        }
        out.std = std::sqrt(acc / static_cast<double>(n - 1));
    }
    return out;
}

} // namespace

DcorProfile layer_profile(const rnn::ActivationTensor &acts, const Matrix &y) {
    if (acts.steps() == 0) {
        throw DegenerateProfileError("activation tensor has no layers");
    }
    if (acts.samples() != y.cols()) {
        throw SampleCountMismatchError(
            "activation tensor holds " + std::to_string(acts.samples()) +
            " samples but Y has " + std::to_string(y.cols()));
    }
    const estat::CenteredDistances target(y);
    DcorProfile profile;
    profile.dataset_tag = acts.dataset_tag;
    profile.epoch = acts.epoch;
    profile.values.reserve(acts.steps());
    for (const Matrix &layer : acts.layers) {
        profile.values.push_back(
            estat::dcor(estat::CenteredDistances(layer), target));
    }
    return profile;
}

std::vector<std::pair<std::size_t, std::size_t>>
acf_alignment(std::size_t layer_count, const std::vector<double> &acf) {
    if (acf.size() < layer_count + 1) {
        throw InsufficientDataError(
            "ACF covers lags up to " + std::to_string(acf.size() - 1) +
            " but the profile has " + std::to_string(layer_count) + " layers");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(layer_count);
    for (std::size_t t = 1; t <= layer_count; ++t) {
        pairs.emplace_back(t, layer_count + 1 - t);
    }
    return pairs;
}

void attach_acf(DcorProfile &profile, const std::vector<double> &acf) {
    const auto pairs = acf_alignment(profile.layers(), acf);
    profile.acf_lags.clear();
    profile.acf_values.clear();
    for (const auto &[layer, lag] : pairs) {
        profile.acf_lags.push_back(lag);
        profile.acf_values.push_back(acf[lag]);
    }
}

double info_loss(const DcorProfile &profile) {
    if (profile.values.empty()) {
        throw DegenerateProfileError("empty profile");
    }
    const double max_r =
        *std::max_element(profile.values.begin(), profile.values.end());
    if (!(max_r > 0.0)) {
        throw DegenerateProfileError(
            "profile is identically zero, information loss undefined");
    }
    const double final_r = profile.values.back();
    return 100.0 * (max_r - final_r) / max_r;
}

HeatmapGrid cross_model_grid(const rnn::ActivationTensor &acts1,
                             const rnn::ActivationTensor &acts2,
                             std::span<const std::size_t> targets1,
                             std::span<const std::size_t> targets2) {
    if (acts1.samples() != acts2.samples()) {
        throw AlignmentError("activation tensors hold different sample "
                             "counts: " + std::to_string(acts1.samples()) +
                             " vs " + std::to_string(acts2.samples()));
    }
    if (targets1.size() != targets2.size()) {
        throw AlignmentError("target index lists differ in length");
    }
    for (std::size_t i = 0; i < targets1.size(); ++i) {
        if (targets1[i] != targets2[i]) {
            throw AlignmentError(
                "forecast targets are misaligned at sample " +
                std::to_string(i) + ": " + std::to_string(targets1[i]) +
                " vs " + std::to_string(targets2[i]));
        }
    }

    std::vector<estat::CenteredDistances> left;
    left.reserve(acts1.steps());
    for (const Matrix &layer : acts1.layers) left.emplace_back(layer);
    std::vector<estat::CenteredDistances> right;
    right.reserve(acts2.steps());
    for (const Matrix &layer : acts2.layers) right.emplace_back(layer);

    HeatmapGrid out;
    out.grid = Matrix(acts1.steps(), acts2.steps());
    for (std::size_t v = 0; v < left.size(); ++v) {
        for (std::size_t m = 0; m < right.size(); ++m) {
            out.grid(v, m) = estat::dcor(left[v], right[m]);
        }
    }
    return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
align_windows(const pipeline::SampleSet &a, const pipeline::SampleSet &b) {
    if (a.H != b.H) {
        throw AlignmentError("sample sets have different horizons");
    }
    std::unordered_map<std::size_t, std::size_t> targets_b;
    targets_b.reserve(b.n);
    for (std::size_t j = 0; j < b.n; ++j) targets_b.emplace(b.target_index(j), j);

    std::vector<std::size_t> pick_a;
    std::vector<std::size_t> pick_b;
    for (std::size_t i = 0; i < a.n; ++i) {
        const auto it = targets_b.find(a.target_index(i));
        if (it != targets_b.end()) {
            pick_a.push_back(i);
            pick_b.push_back(it->second);
        }
    }
    if (pick_a.empty()) {
        throw AlignmentError(
            "sample sets share no forecast targets (empty intersection)");
    }
    return {std::move(pick_a), std::move(pick_b)};
}

pipeline::SampleSet select_samples(const pipeline::SampleSet &samples,
                                   std::span<const std::size_t> indices) {
    pipeline::SampleSet out;
    out.T = samples.T;
    out.H = samples.H;
    out.n = indices.size();
    out.segment_offset = samples.segment_offset;
    out.origins.resize(indices.size());
    out.X = Matrix(samples.T, indices.size());
    out.Y = Matrix(samples.H, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        const std::size_t src = indices[j];
        if (src >= samples.n) {
            throw ConfigError("sample index out of range");
        }
        out.origins[j] = samples.origins[src];
        std::copy(samples.X.col(src), samples.X.col(src) + samples.T,
                  out.X.col(j));
        std::copy(samples.Y.col(src), samples.Y.col(src) + samples.H,
                  out.Y.col(j));
    }
    return out;
}

Metrics eval_metrics(const Matrix &predictions, const Matrix &targets) {
    if (predictions.rows() != targets.rows() ||
        predictions.cols() != targets.cols()) {
        throw SampleCountMismatchError("metric shapes differ");
    }
    Metrics out;
    const double *p = predictions.data();
    const double *y = targets.data();
    const std::size_t total = targets.size();
    double se = 0.0;
    double ape = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const double d = p[i] - y[i];
        se += d * d;
        if (std::abs(y[i]) >= kMapeThreshold) {
            ape += std::abs(d) / std::abs(y[i]);
            ++used;
        }
    }
    out.mse = se / static_cast<double>(total);
    out.mape_skipped = total - used;
    if (used == 0) {
        throw DegenerateTargetsError(
            "every target is below the near-zero threshold, MAPE undefined");
    }
    out.mape = ape / static_cast<double>(used);
    return out;
}

std::vector<double> destandardize_predictions(std::span<const double> values,
                                              double mean, double std) {
    if (!(std > 0.0)) {
        throw ConfigError("destandardize requires std > 0");
    }
    return pipeline::destandardize(values, mean, std);
}

AggregateSummary aggregate(const std::vector<RunSummary> &runs) {
    if (runs.empty()) {
        throw ConfigError("aggregate needs at least one run");
    }
    AggregateSummary out;
    out.run_count = runs.size();

    std::vector<double> mse, mape, max_r, final_r, loss;
    for (const RunSummary &r : runs) {
        mse.push_back(r.mse);
        mape.push_back(r.mape);
        max_r.push_back(r.max_r);
        final_r.push_back(r.final_r);
        loss.push_back(r.info_loss_pct);
    }
    out.mse = mean_std(mse);
    out.mape = mean_std(mape);
    out.max_r = mean_std(max_r);
    out.final_r = mean_std(final_r);
    out.info_loss_pct = mean_std(loss);

    const std::size_t layers = runs.front().profile.layers();
    out.mean_profile.assign(layers, 0.0);
    const std::size_t acf_len = runs.front().profile.acf_values.size();
    out.mean_acf.assign(acf_len, 0.0);
    for (const RunSummary &r : runs) {
        if (r.profile.layers() != layers) {
            throw ConfigError("runs disagree on profile length");
        }
        for (std::size_t t = 0; t < layers; ++t) {
            out.mean_profile[t] += r.profile.values[t];
        }
        for (std::size_t t = 0; t < acf_len && t < r.profile.acf_values.size();
             ++t) {
            out.mean_acf[t] += r.profile.acf_values[t];
        }
    }
    for (double &v : out.mean_profile) v /= static_cast<double>(runs.size());
    for (double &v : out.mean_acf) v /= static_cast<double>(runs.size());
    return out;
}

} // namespace rnndcor::analysis
