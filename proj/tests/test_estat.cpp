#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/estat.hpp"
#include "rnndcor/rng.hpp"

using namespace rnndcor;

namespace {

Matrix random_matrix(std::size_t d, std::size_t n, Rng &rng) {
    Matrix m(d, n);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.data()[i] = rng.next_normal();
    }
    return m;
}

Matrix row_vector(const std::vector<double> &values) {
    Matrix m(1, values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(0, i) = values[i];
    return m;
}

} // namespace

TEST_CASE("pairwise distances: 3-4-5 triangle") {
    Matrix m(2, 2);
    m(0, 0) = 0.0; m(1, 0) = 0.0;
    m(0, 1) = 3.0; m(1, 1) = 4.0;
    const Matrix d = estat::pairwise_distances(m);
    CHECK(d(0, 0) == 0.0);
    CHECK(d(1, 1) == 0.0);
    CHECK(d(0, 1) == doctest::Approx(5.0));
    CHECK(d(1, 0) == doctest::Approx(5.0));
}

TEST_CASE("pairwise distances: identical columns give zeros") {
    Matrix m(3, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m(0, j) = 1.0; m(1, j) = -2.0; m(2, j) = 0.5;
    }
    const Matrix d = estat::pairwise_distances(m);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d.data()[i] == 0.0);
}

TEST_CASE("pairwise distances match the double-loop reference") {
    Rng rng(31);
    const Matrix m = random_matrix(3, 5, rng);
    const Matrix d = estat::pairwise_distances(m);
    const auto ref = oracles::naive_distance_matrix(m);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(std::abs(d(i, j) - ref[i][j]) < 1e-12);
        }
    }
}

TEST_CASE("pairwise distances reject non-finite input") {
    Matrix m(1, 2);
    m(0, 0) = 1.0;
    m(0, 1) = std::nan("");
    CHECK_THROWS_AS(estat::pairwise_distances(m), NonFiniteInputError);
}

TEST_CASE("double centering of the n=2 distance matrix") {
    Matrix d(2, 2);
    d(0, 1) = 1.0;
    d(1, 0) = 1.0;
    const Matrix b = estat::double_center(d);
    CHECK(b(0, 0) == doctest::Approx(-0.5));
    CHECK(b(0, 1) == doctest::Approx(0.5));
    CHECK(b(1, 0) == doctest::Approx(0.5));
    CHECK(b(1, 1) == doctest::Approx(-0.5));
}

TEST_CASE("double centering an all-zero matrix stays zero") {
    Matrix d(3, 3);
    const Matrix b = estat::double_center(d);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.data()[i] == 0.0);
}

TEST_CASE("double centering kills row and column sums") {
    Rng rng(17);
    Matrix d(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            const double v = std::abs(rng.next_normal());
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    const Matrix b = estat::double_center(d);
    for (std::size_t i = 0; i < 6; ++i) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < 6; ++j) {
            row += b(i, j);
            col += b(j, i);
        }
        CHECK(std::abs(row) < 1e-12);
        CHECK(std::abs(col) < 1e-12);
    }
}

TEST_CASE("double centering rejects asymmetric input") {
    Matrix d(2, 2);
    d(0, 1) = 1.0;
    d(1, 0) = 2.0;
    CHECK_THROWS_AS(estat::double_center(d), InvalidDistanceMatrixError);
}

TEST_CASE("dcov2 of constant columns is zero") {
    Matrix x(2, 5);
    for (std::size_t j = 0; j < 5; ++j) { x(0, j) = 1.0; x(1, j) = 2.0; }
    Rng rng(3);
    const Matrix y = random_matrix(1, 5, rng);
    CHECK(estat::dcov2(x, y) == 0.0);
}

TEST_CASE("dcov2 hand value for n=2 scalar samples") {
    const Matrix x = row_vector({0.0, 1.0});
    const Matrix y = row_vector({0.0, 1.0});
    CHECK(estat::dcov2(x, y) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("dcov2 matches the naive four-mean reference") {
    Rng rng(101);
    const Matrix x = random_matrix(4, 30, rng);
    const Matrix y = random_matrix(2, 30, rng);
    CHECK(std::abs(estat::dcov2(x, y) - oracles::naive_dcov2(x, y)) < 1e-12);
}

TEST_CASE("dcov2 rejects mismatched sample counts") {
    Rng rng(5);
    const Matrix x = random_matrix(2, 5, rng);
    const Matrix y = random_matrix(2, 6, rng);
    CHECK_THROWS_AS(estat::dcov2(x, y), SampleCountMismatchError);
    CHECK_THROWS_AS(estat::dcor(x, y), SampleCountMismatchError);
}

TEST_CASE("dcor of a sample with itself is 1") {
    Rng rng(19);
    const Matrix x = random_matrix(3, 12, rng);
    CHECK(estat::dcor(x, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dcor with a constant side is 0 by the zero-denominator case") {
    Matrix x(1, 8);
    for (std::size_t j = 0; j < 8; ++j) x(0, j) = 3.14;
    Rng rng(23);
    const Matrix y = random_matrix(1, 8, rng);
    CHECK(estat::dcor(x, y) == 0.0);
}

TEST_CASE("dcor is invariant to affine rescaling of one side") {
    Matrix x(1, 10);
    for (std::size_t j = 0; j < 10; ++j) x(0, j) = static_cast<double>(j + 1);
    Matrix y(1, 10);
    for (std::size_t j = 0; j < 10; ++j) y(0, j) = 2.0 * x(0, j) + 3.0;
    CHECK(estat::dcor(x, y) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dcor is symmetric in its arguments, exactly") {
    Rng rng(77);
    const Matrix x = random_matrix(3, 20, rng);
    const Matrix y = random_matrix(5, 20, rng);
    CHECK(estat::dcor(x, y) == estat::dcor(y, x));
}

TEST_CASE("translation and positive scaling leave dcor unchanged") {
    Rng rng(61);
    const Matrix x = random_matrix(2, 25, rng);
    const Matrix y = random_matrix(3, 25, rng);
    const double base = estat::dcor(x, y);

    Matrix shifted = x;
    for (std::size_t j = 0; j < shifted.cols(); ++j) {
        shifted(0, j) += 17.0;
        shifted(1, j) -= 4.0;
    }
    CHECK(std::abs(estat::dcor(shifted, y) - base) < 1e-12);

    Matrix scaled = x;
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled.data()[i] *= 2.5;
    CHECK(std::abs(estat::dcor(scaled, y) - base) < 1e-12);
}

TEST_CASE("oracle equivalence over 100 random pairs with mixed dims") {
    Rng rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_below(39));
        const std::size_t dx = 1 + static_cast<std::size_t>(rng.next_below(6));
        const std::size_t dy = 1 + static_cast<std::size_t>(rng.next_below(6));
        const Matrix x = random_matrix(dx, n, rng);
        const Matrix y = random_matrix(dy, n, rng);
        const double got = estat::dcor(x, y);
        const double expected = oracles::naive_dcor(x, y);
        CHECK(std::abs(got - expected) < 1e-12);
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
    }
}

TEST_CASE("independent samples tend to low dcor at n=200") {
    int below = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(9000 + seed);
        const Matrix x = random_matrix(1, 200, rng);
        const Matrix y = random_matrix(1, 200, rng);
        if (estat::dcor(x, y) < 0.25) ++below;
    }
    CHECK(below >= 95);
}

TEST_CASE("dcor grows toward 1 with dimension at fixed n (iid normals)") {
    const std::size_t n = 50;
    const std::vector<std::size_t> dims = {1, 10, 100, 1000};
    std::vector<double> means;
    for (const std::size_t d : dims) {
        double acc = 0.0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng(400 + seed);
            acc += estat::dcor(random_matrix(d, n, rng),
                               random_matrix(d, n, rng));
        }
        means.push_back(acc / 5.0);
    }
    CHECK(means[0] < means[1]);
    CHECK(means[1] < means[2]);
    CHECK(means[2] < means[3]);
    CHECK(means[3] > 0.95);
}

TEST_CASE("acf basics") {
    std::vector<double> z;
    Rng rng(55);
    for (int i = 0; i < 500; ++i) z.push_back(rng.next_normal());
    const auto acf = estat::acf(z, 10);
    REQUIRE(acf.size() == 11);
    CHECK(acf[0] == 1.0);
    for (std::size_t h = 1; h <= 10; ++h) {
        CHECK(acf[h] == doctest::Approx(oracles::naive_acf(z, h)).epsilon(1e-12));
    }
}

TEST_CASE("acf of an AR(1) draw sits near the analytic value") {
    // brute-force mean over 20 seeds, compared to 0.8^h
    const std::size_t L = 4000;
    std::vector<double> mean_acf(6, 0.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::vector<double> z(L);
        Rng rng(100 + seed);
        double prev = 0.0;
        for (std::size_t l = 0; l < L + 500; ++l) {
            const double v = 0.8 * prev + rng.next_normal();
            if (l >= 500) z[l - 500] = v;
            prev = v;
        }
        const auto acf = estat::acf(z, 5);
        for (std::size_t h = 1; h <= 5; ++h) mean_acf[h] += acf[h] / 20.0;
    }
    for (std::size_t h = 1; h <= 5; ++h) {
        CHECK(std::abs(mean_acf[h] - std::pow(0.8, double(h))) < 0.05);
    }
}

TEST_CASE("acf rejects constant series") {
    std::vector<double> z(100, 2.0);
    CHECK_THROWS_AS(estat::acf(z, 5), DegenerateSeriesError);
}

TEST_CASE("acf rejects series shorter than the requested lag") {
    std::vector<double> z = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(estat::acf(z, 5), InsufficientDataError);
}

TEST_CASE("significance band values") {
    CHECK(estat::acf_significance_band(400) == doctest::Approx(0.098));
    CHECK(estat::acf_significance_band(4) == doctest::Approx(0.98));
    CHECK(estat::acf_significance_band(10000) == doctest::Approx(0.0196));
}
