#include "rnndcor/pipeline.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"

namespace rnndcor::pipeline {

StandardizedSeries standardize(std::span<const double> values, Range fit) {
    if (fit.end > values.size() || fit.begin >= fit.end) {
        throw ConfigError("fit segment [" + std::to_string(fit.begin) + ", " +
                          std::to_string(fit.end) +
                          ") does not lie inside the series");
    }
    const std::size_t n = fit.length();
    double mean = 0.0;
    for (std::size_t i = fit.begin; i < fit.end; ++i) mean += values[i];
    mean /= static_cast<double>(n);

    double var = 0.0;
    for (std::size_t i = fit.begin; i < fit.end; ++i) {
        const double d = values[i] - mean;
        var += d * d;
    }
    var /= static_cast<double>(n); // population divisor, fixed for
                                   // reproducibility
    if (!(var > 0.0)) {
        throw DegenerateSeriesError(
            "fit segment has zero variance, cannot standardize");
    }
    const double std = std::sqrt(var);

    StandardizedSeries out;
    out.mean = mean;
    out.std = std;
    out.values.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.values[i] = (values[i] - mean) / std;
    }
    return out;
}

std::vector<double> destandardize(std::span<const double> values, double mean,
                                  double std) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = values[i] * std + mean;
    }
    return out;
}

std::pair<Range, Range> split(std::size_t length, double ratio,
                              std::size_t min_segment) {
    if (!(ratio > 0.0) || !(ratio < 1.0)) {
        throw ConfigError("split ratio must lie in (0, 1)");
    }
    const std::size_t cut =
        static_cast<std::size_t>(std::floor(ratio * static_cast<double>(length)));
    Range train{0, cut};
    Range test{cut, length};
    if (min_segment > 0 &&
        (train.length() < min_segment || test.length() < min_segment)) {
        throw InsufficientDataError(
            "split " + std::to_string(train.length()) + "/" +
            std::to_string(test.length()) +
            " leaves a segment shorter than the window requirement of " +
            std::to_string(min_segment));
    }
    return {train, test};
}

SampleSet make_samples(std::span<const double> values, std::size_t T,
                       std::size_t H, std::size_t segment_offset) {
    if (T == 0 || H == 0) {
        throw ConfigError("window size and horizon must be positive");
    }
    const std::size_t len = values.size();
    if (len < T + H) {
        throw InsufficientDataError(
            "segment of length " + std::to_string(len) +
            " cannot produce windows with T=" + std::to_string(T) +
            ", H=" + std::to_string(H));
    }
    const std::size_t n = len - T - H + 1;

    SampleSet out;
    out.T = T;
    out.H = H;
    out.n = n;
    out.segment_offset = segment_offset;
    out.origins.resize(n);
    out.X = Matrix(T, n);
    out.Y = Matrix(H, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.origins[i] = segment_offset + i;
        double *x = out.X.col(i);
        for (std::size_t t = 0; t < T; ++t) x[t] = values[i + t];
        double *y = out.Y.col(i);
        for (std::size_t k = 0; k < H; ++k) y[k] = values[i + T + k];
    }
    return out;
}

void save_samples_csv(const SampleSet &samples, const std::string &path) {
    std::ostringstream text;
    for (std::size_t t = 1; t <= samples.T; ++t) {
        text << "x" << t << (t < samples.T ? "," : "");
    }
    for (std::size_t k = 1; k <= samples.H; ++k) {
        text << ",y" << k;
    }
    text << "\n";
    for (std::size_t i = 0; i < samples.n; ++i) {
        for (std::size_t t = 0; t < samples.T; ++t) {
            if (t > 0) text << ",";
            text << csvio::format_double(samples.X(t, i));
        }
        for (std::size_t k = 0; k < samples.H; ++k) {
            text << "," << csvio::format_double(samples.Y(k, i));
        }
        text << "\n";
    }
    csvio::write_text_file(path, text.str());
}

} // namespace rnndcor::pipeline
