#ifndef RNNDCOR_TESTS_ORACLES_HPP
#define RNNDCOR_TESTS_ORACLES_HPP

// Independent reference implementations used by the unit and acceptance
// suites. These deliberately mirror the definitions with plain loops and
// share no code with the library paths they check.

#include <cmath>
#include <cstddef>
#include <vector>

#include "rnndcor/matrix.hpp"

namespace oracles {

inline std::vector<std::vector<double>>
naive_distance_matrix(const rnndcor::Matrix &m) {
    const std::size_t n = m.cols();
    const std::size_t d = m.rows();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double diff = m(k, i) - m(k, j);
                acc += diff * diff;
            }
            dist[i][j] = std::sqrt(acc);
        }
    }
    return dist;
}

inline std::vector<std::vector<double>>
naive_double_center(const std::vector<std::vector<double>> &dist) {
    const std::size_t n = dist.size();
    std::vector<double> row_mean(n, 0.0), col_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            row_mean[i] += dist[i][j];
            col_mean[j] += dist[i][j];
            grand += dist[i][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        row_mean[i] /= static_cast<double>(n);
        col_mean[i] /= static_cast<double>(n);
    }
    grand /= static_cast<double>(n) * static_cast<double>(n);

    std::vector<std::vector<double>> centered(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            centered[i][j] = dist[i][j] - row_mean[i] - col_mean[j] + grand;
        }
    }
    return centered;
}

inline double naive_dcov2(const rnndcor::Matrix &x, const rnndcor::Matrix &y) {
    const auto b = naive_double_center(naive_distance_matrix(x));
    const auto c = naive_double_center(naive_distance_matrix(y));
    const std::size_t n = b.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) acc += b[i][j] * c[i][j];
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n));
}

inline double naive_dcor(const rnndcor::Matrix &x, const rnndcor::Matrix &y) {
    const double vxy = naive_dcov2(x, y);
    const double vxx = naive_dcov2(x, x);
    const double vyy = naive_dcov2(y, y);
    const double denom_sq = vxx * vyy;
    if (!(denom_sq > 0.0)) return 0.0;
    const double r2 = vxy / std::sqrt(denom_sq);
    return std::sqrt(r2 < 0.0 ? 0.0 : (r2 > 1.0 ? 1.0 : r2));
}

inline double naive_acf(const std::vector<double> &z, std::size_t lag) {
    const std::size_t len = z.size();
    double mean = 0.0;
    for (double v : z) mean += v;
    mean /= static_cast<double>(len);
    double num = 0.0, denom = 0.0;
    for (std::size_t l = 0; l < len; ++l) {
        denom += (z[l] - mean) * (z[l] - mean);
        if (l >= lag) num += (z[l] - mean) * (z[l - lag] - mean);
    }
    return num / denom;
}

inline double mean_of(const std::vector<double> &v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

inline double variance_of(const std::vector<double> &v) {
    const double m = mean_of(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
}

} // namespace oracles

#endif
