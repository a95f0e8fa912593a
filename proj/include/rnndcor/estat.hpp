#ifndef RNNDCOR_ESTAT_HPP
#define RNNDCOR_ESTAT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rnndcor/matrix.hpp"

namespace rnndcor::estat {

/// Pairwise Euclidean distances between the columns of m.
/// Result is n x n, symmetric, zero diagonal. Columns may live in any
/// dimension d >= 1; the two sides of a distance-correlation call do not
/// need to share d.
Matrix pairwise_distances(const Matrix &m);

/// Double centering of a distance matrix:
///   B_ij = b_ij - rowmean_i - colmean_j + grandmean.
/// Every row and column of the result sums to zero.
Matrix double_center(const Matrix &d);

/// Distance matrix of a sample, centered once and reused across many
/// covariance evaluations (profiles and heatmap grids hit the same side
/// dozens of times).
class CenteredDistances {
  public:
    explicit CenteredDistances(const Matrix &points);

    const Matrix &matrix() const noexcept { return centered_; }
    std::size_t n() const noexcept { return centered_.rows(); }
    std::size_t dim() const noexcept { return dim_; }

    /// V^2(X, X), cached.
    double self_dcov2() const noexcept { return self_dcov2_; }

  private:
    Matrix centered_;
    std::size_t dim_ = 0;
    double self_dcov2_ = 0.0;
};

/// Sample distance covariance V^2(X, Y) = (1/n^2) sum_ij B_ij C_ij.
/// Nonnegative up to rounding; tiny negative results (>= -1e-12) are
/// clamped to zero, anything more negative is an internal error.
double dcov2(const CenteredDistances &x, const CenteredDistances &y);
double dcov2(const Matrix &x, const Matrix &y);

/// Empirical distance correlation:
///   R^2 = V^2(X,Y) / sqrt(V^2(X) V^2(Y))  when the denominator is > 0,
///   0 otherwise.
/// Returns R (the square root), clamped to [0, 1]. dcor_squared exposes
/// R^2 for callers that want the raw ratio.
double dcor(const Matrix &x, const Matrix &y);
double dcor(const CenteredDistances &x, const CenteredDistances &y);
double dcor_squared(const Matrix &x, const Matrix &y);
double dcor_squared(const CenteredDistances &x, const CenteredDistances &y);

/// Sample autocorrelation for lags 0..max_lag ([0] is defined as 1):
///   rho(h) = sum_{l=h+1..L} (z_l - mean)(z_{l-h} - mean)
///            / sum_{l=1..L} (z_l - mean)^2.
std::vector<double> acf(std::span<const double> values, std::size_t max_lag);

/// 95% white-noise significance band, 1.96 / sqrt(L).
double acf_significance_band(std::size_t length);

} // namespace rnndcor::estat

#endif
