#ifndef RNNDCOR_ANALYSIS_HPP
#define RNNDCOR_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rnndcor/estat.hpp"
#include "rnndcor/matrix.hpp"
#include "rnndcor/pipeline.hpp"
#include "rnndcor/rnn.hpp"

namespace rnndcor::analysis {

/// Per-layer distance correlation to the target matrix, r_t = R(A_t, Y),
/// with the companion autocorrelation values aligned layer t <-> lag
/// T+1-t.
struct DcorProfile {
    std::vector<double> values; // r_1..r_T
    std::string dataset_tag;
    std::size_t epoch = 0;
    std::vector<std::size_t> acf_lags; // lag paired with each layer
    std::vector<double> acf_values;    // ACF at those lags

    std::size_t layers() const noexcept { return values.size(); }
};

DcorProfile layer_profile(const rnn::ActivationTensor &acts, const Matrix &y);

/// Layer t reads the input that sits T+1-t steps before the target, so
/// it pairs with ACF lag T+1-t. Needs max_lag >= T.
/// acf holds lags 0..max_lag as produced by estat::acf.
std::vector<std::pair<std::size_t, std::size_t>>
acf_alignment(std::size_t layer_count, const std::vector<double> &acf);

/// Attach aligned ACF values to a computed profile.
void attach_acf(DcorProfile &profile, const std::vector<double> &acf);

/// 100 * (max_t r_t - r_T) / max_t r_t. Throws DegenerateProfileError
/// when every r_t is zero.
double info_loss(const DcorProfile &profile);

struct HeatmapGrid {
    Matrix grid; // T1 x T2, entry (v, m) = R(A_v of model 1, A_m of model 2)
    std::string model1;
    std::string model2;
};

/// Cross-layer grid between two activation tensors. Both tensors must
/// hold the same samples: equal counts and identical absolute forecast
/// targets (pass the target indices from the aligned sample sets).
HeatmapGrid cross_model_grid(const rnn::ActivationTensor &acts1,
                             const rnn::ActivationTensor &acts2,
                             std::span<const std::size_t> targets1 = {},
                             std::span<const std::size_t> targets2 = {});

/// Indices (into each sample set) of the samples whose forecast targets
/// coincide in absolute time. Lets two models with different window sizes
/// be compared on identical targets.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
align_windows(const pipeline::SampleSet &a, const pipeline::SampleSet &b);

/// Column subset of a sample set (used with align_windows).
pipeline::SampleSet select_samples(const pipeline::SampleSet &samples,
                                   std::span<const std::size_t> indices);

struct Metrics {
    double mse = 0.0;
    double mape = 0.0;
    std::size_t mape_skipped = 0; // targets below the near-zero threshold
};

/// MSE over everything; MAPE over targets with |y| >= 1e-8, skipped count
/// reported. Throws DegenerateTargetsError when no target passes the
/// threshold.
Metrics eval_metrics(const Matrix &predictions, const Matrix &targets);

std::vector<double> destandardize_predictions(std::span<const double> values,
                                              double mean, double std);

struct RunSummary {
    double mse = 0.0;
    double mape = 0.0;
    std::size_t mape_skipped = 0;
    DcorProfile profile;
    double max_r = 0.0;
    double final_r = 0.0;
    double info_loss_pct = 0.0;
    std::uint64_t seed = 0;
    bool subsampled = false;
};

struct MeanStd {
    double mean = 0.0;
    double std = 0.0; // sample std (n-1 divisor), 0 for a single run
};

struct AggregateSummary {
    std::size_t run_count = 0;
    MeanStd mse;
    MeanStd mape;
    MeanStd max_r;
    MeanStd final_r;
    MeanStd info_loss_pct;
    std::vector<double> mean_profile;
    std::vector<double> mean_acf;
};

AggregateSummary aggregate(const std::vector<RunSummary> &runs);

} // namespace rnndcor::analysis

#endif
