#include "rnndcor/matrix.hpp"

#include <cassert>
#include <cmath>

namespace rnndcor {

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void mul_into(const Matrix &a, const Matrix &b, Matrix &out) {
    assert(a.cols() == b.rows());
    if (out.rows() != a.rows() || out.cols() != b.cols()) {
        out = Matrix(a.rows(), b.cols());
    } else {
        out.fill(0.0);
    }
    const std::size_t r = a.rows(), k = a.cols(), c = b.cols();
    // Column-axpy order: every inner pass runs down a contiguous column.
    for (std::size_t j = 0; j < c; ++j) {
        double *oj = out.col(j);
        const double *bj = b.col(j);
        for (std::size_t l = 0; l < k; ++l) {
            const double s = bj[l];
            if (s == 0.0) continue;
            const double *al = a.col(l);
            for (std::size_t i = 0; i < r; ++i) oj[i] += al[i] * s;
        }
    }
}

void mul_transpose_a_into(const Matrix &a, const Matrix &b, Matrix &out) {
    assert(a.rows() == b.rows());
    if (out.rows() != a.cols() || out.cols() != b.cols()) {
        out = Matrix(a.cols(), b.cols());
    }
    const std::size_t r = a.cols(), k = a.rows(), c = b.cols();
    for (std::size_t j = 0; j < c; ++j) {
        double *oj = out.col(j);
        const double *bj = b.col(j);
        for (std::size_t i = 0; i < r; ++i) {
            const double *ai = a.col(i);
            double acc = 0.0;
            for (std::size_t l = 0; l < k; ++l) acc += ai[l] * bj[l];
            oj[i] = acc;
        }
    }
}

void add_outer_products(const Matrix &u, const Matrix &v, Matrix &out) {
    assert(u.cols() == v.cols());
    assert(out.rows() == u.rows() && out.cols() == v.rows());
    const std::size_t n = u.cols(), r = u.rows(), c = v.rows();
    for (std::size_t j = 0; j < n; ++j) {
        const double *uj = u.col(j);
        const double *vj = v.col(j);
        for (std::size_t l = 0; l < c; ++l) {
            const double s = vj[l];
            if (s == 0.0) continue;
            double *ol = out.col(l);
            for (std::size_t i = 0; i < r; ++i) ol[i] += uj[i] * s;
        }
    }
}

} // namespace rnndcor
