#ifndef RNNDCOR_MATRIX_HPP
#define RNNDCOR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace rnndcor {

/// Dense column-major matrix of doubles. Columns are contiguous, which is
/// the layout every hot loop in this project wants (sample vectors and
/// hidden states are columns).
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double &operator()(std::size_t r, std::size_t c) {
        return data_[c * rows_ + r];
    }
    double operator()(std::size_t r, std::size_t c) const {
        return data_[c * rows_ + r];
    }

    double *col(std::size_t c) { return data_.data() + c * rows_; }
    const double *col(std::size_t c) const { return data_.data() + c * rows_; }

    std::span<const double> col_span(std::size_t c) const {
        return {col(c), rows_};
    }

    double *data() noexcept { return data_.data(); }
    const double *data() const noexcept { return data_.data(); }
    std::size_t size() const noexcept { return data_.size(); }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool all_finite() const;

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// out = a * b. Shapes: (r x k) * (k x c) -> (r x c).
void mul_into(const Matrix &a, const Matrix &b, Matrix &out);

/// out = a^T * b. Shapes: (k x r)^T * (k x c) -> (r x c).
void mul_transpose_a_into(const Matrix &a, const Matrix &b, Matrix &out);

/// out += u * v^T over matching sample columns: for each column j,
/// out += u.col(j) * v.col(j)^T. Shapes: (r x n), (c x n) -> out (r x c).
void add_outer_products(const Matrix &u, const Matrix &v, Matrix &out);

} // namespace rnndcor

#endif
