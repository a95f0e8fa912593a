#ifndef RNNDCOR_PIPELINE_HPP
#define RNNDCOR_PIPELINE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rnndcor/matrix.hpp"

namespace rnndcor::pipeline {

/// Half-open index range into a series.
struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t length() const noexcept { return end - begin; }
    friend bool operator==(const Range &, const Range &) = default;
};

struct StandardizedSeries {
    std::vector<double> values;
    double mean = 0.0; // statistics of the fit segment (population divisor)
    double std = 0.0;
};

/// z-score the whole series using the fit segment's mean and standard
/// deviation. Throws DegenerateSeriesError when the fit segment has zero
/// variance.
StandardizedSeries standardize(std::span<const double> values, Range fit);

std::vector<double> destandardize(std::span<const double> values, double mean,
                                  double std);

/// Chronological split: first floor(ratio * L) points train, rest test.
/// When min_segment > 0 both segments must be at least that long
/// (callers pass T + H so both sides can be windowed).
std::pair<Range, Range> split(std::size_t length, double ratio,
                              std::size_t min_segment = 0);

/// Sliding-window samples over one contiguous segment. Column i of X is
/// a window of the segment; column i of Y holds the next H values.
/// origins maps each sample to the absolute series index of its first
/// input value, and survives subsetting (alignment selects arbitrary
/// sample subsets).
struct SampleSet {
    Matrix X; // T x n
    Matrix Y; // H x n
    std::size_t T = 0;
    std::size_t H = 0;
    std::size_t n = 0;
    std::size_t segment_offset = 0;
    std::vector<std::size_t> origins; // sample -> absolute input start

    /// Absolute index of the first input value of sample i.
    std::size_t input_start(std::size_t i) const noexcept {
        return origins[i];
    }
    /// Absolute index of the first target value of sample i.
    std::size_t target_index(std::size_t i) const noexcept {
        return origins[i] + T;
    }
};

SampleSet make_samples(std::span<const double> values, std::size_t T,
                       std::size_t H, std::size_t segment_offset = 0);

/// Debug export: n rows with columns x1..xT,y1..yH.
void save_samples_csv(const SampleSet &samples, const std::string &path);

} // namespace rnndcor::pipeline

#endif
