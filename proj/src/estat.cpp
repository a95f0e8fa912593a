#include "rnndcor/estat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rnndcor/errors.hpp"

namespace rnndcor::estat {

namespace {

constexpr double kNegativeDcovTolerance = 1e-12;

double clamp_dcov2(double v) {
    if (v >= 0.0) return v;
    if (v >= -kNegativeDcovTolerance) return 0.0;
    throw InternalError("distance covariance came out negative (" +
                        std::to_string(v) + "), beyond rounding tolerance");
}

} // namespace

Matrix pairwise_distances(const Matrix &m) {
    const std::size_t n = m.cols();
    const std::size_t d = m.rows();
    if (n < 2) {
        throw SampleCountMismatchError(
            "pairwise distances need at least 2 sample columns, got " +
            std::to_string(n));
    }
    if (!m.all_finite()) {
        throw NonFiniteInputError("sample matrix contains non-finite values");
    }
    Matrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double *cj = m.col(j);
        for (std::size_t i = j + 1; i < n; ++i) {
            const double *ci = m.col(i);
            double acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double diff = ci[k] - cj[k];
                acc += diff * diff;
            }
            const double dist = std::sqrt(acc);
            out(i, j) = dist;
            out(j, i) = dist;
        }
    }
    return out;
}

Matrix double_center(const Matrix &d) {
    const std::size_t n = d.rows();
    if (n != d.cols() || n == 0) {
        throw InvalidDistanceMatrixError("distance matrix must be square");
    }
    double max_abs = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        max_abs = std::max(max_abs, std::abs(d.data()[i]));
    }
    const double tol = 1e-12 * (1.0 + max_abs);
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(d(j, j)) > tol) {
            throw InvalidDistanceMatrixError(
                "distance matrix has a nonzero diagonal");
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            if (std::abs(d(i, j) - d(j, i)) > tol) {
                throw InvalidDistanceMatrixError(
                    "distance matrix is not symmetric");
            }
        }
    }

    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double *cj = d.col(j);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += cj[i];
        row_mean[j] = s / static_cast<double>(n); // symmetric: row = col mean
        grand += s;
    }
    grand /= static_cast<double>(n) * static_cast<double>(n);

    Matrix b(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double *cj = d.col(j);
        double *bj = b.col(j);
        const double cm = row_mean[j];
        for (std::size_t i = 0; i < n; ++i) {
            bj[i] = cj[i] - row_mean[i] - cm + grand;
        }
    }
    return b;
}

CenteredDistances::CenteredDistances(const Matrix &points)
    : centered_(double_center(pairwise_distances(points))),
      dim_(points.rows()) {
    const std::size_t n = centered_.rows();
    double acc = 0.0;
    const double *p = centered_.data();
    for (std::size_t i = 0; i < centered_.size(); ++i) acc += p[i] * p[i];
    self_dcov2_ =
        clamp_dcov2(acc / (static_cast<double>(n) * static_cast<double>(n)));
}

double dcov2(const CenteredDistances &x, const CenteredDistances &y) {
    const std::size_t n = x.n();
    if (n != y.n()) {
        throw SampleCountMismatchError(
            "distance covariance needs equal sample counts: " +
            std::to_string(n) + " vs " + std::to_string(y.n()));
    }
    const double *b = x.matrix().data();
    const double *c = y.matrix().data();
    double acc = 0.0;
    const std::size_t total = n * n;
    for (std::size_t i = 0; i < total; ++i) acc += b[i] * c[i];
    return clamp_dcov2(acc /
                       (static_cast<double>(n) * static_cast<double>(n)));
}

double dcov2(const Matrix &x, const Matrix &y) {
    if (x.cols() != y.cols()) {
        throw SampleCountMismatchError(
            "distance covariance needs equal sample counts: " +
            std::to_string(x.cols()) + " vs " + std::to_string(y.cols()));
    }
    return dcov2(CenteredDistances(x), CenteredDistances(y));
}

double dcor_squared(const CenteredDistances &x, const CenteredDistances &y) {
    const double denom = std::sqrt(x.self_dcov2() * y.self_dcov2());
    if (!(denom > 0.0)) return 0.0;
    const double r2 = dcov2(x, y) / denom;
    return std::clamp(r2, 0.0, 1.0);
}

double dcor_squared(const Matrix &x, const Matrix &y) {
    if (x.cols() != y.cols()) {
        throw SampleCountMismatchError(
            "distance correlation needs equal sample counts: " +
            std::to_string(x.cols()) + " vs " + std::to_string(y.cols()));
    }
    return dcor_squared(CenteredDistances(x), CenteredDistances(y));
}

double dcor(const CenteredDistances &x, const CenteredDistances &y) {
    return std::sqrt(dcor_squared(x, y));
}

double dcor(const Matrix &x, const Matrix &y) {
    return std::sqrt(dcor_squared(x, y));
}

std::vector<double> acf(std::span<const double> values, std::size_t max_lag) {
    const std::size_t len = values.size();
    if (len < max_lag + 2) {
        throw InsufficientDataError("series of length " + std::to_string(len) +
                                    " is too short for lag " +
                                    std::to_string(max_lag));
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(len);

    double denom = 0.0;
    for (double v : values) denom += (v - mean) * (v - mean);
    if (!(denom > 0.0)) {
        throw DegenerateSeriesError(
            "series has zero variance, autocorrelation undefined");
    }

    std::vector<double> out(max_lag + 1);
    out[0] = 1.0;
    for (std::size_t h = 1; h <= max_lag; ++h) {
        double num = 0.0;
        for (std::size_t l = h; l < len; ++l) {
            num += (values[l] - mean) * (values[l - h] - mean);
        }
        out[h] = num / denom;
    }
    return out;
}

double acf_significance_band(std::size_t length) {
    if (length < 2) {
        throw InsufficientDataError("significance band needs length >= 2");
    }
    return 1.96 / std::sqrt(static_cast<double>(length));
}

} // namespace rnndcor::estat
