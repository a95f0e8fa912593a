#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/pipeline.hpp"
#include "rnndcor/rng.hpp"
#include "rnndcor/tsgen.hpp"

using namespace rnndcor;
using namespace rnndcor::pipeline;

TEST_CASE("standardize on the whole series centers it") {
    const std::vector<double> values = {2.0, 4.0, 6.0};
    const StandardizedSeries s = standardize(values, {0, 3});
    CHECK(s.mean == doctest::Approx(4.0));
    CHECK(s.std == doctest::Approx(std::sqrt(8.0 / 3.0)));
    CHECK(oracles::mean_of(s.values) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("standardize rejects constant fit segments") {
    const std::vector<double> values(10, 3.0);
    CHECK_THROWS_AS(standardize(values, {0, 10}), DegenerateSeriesError);
}

TEST_CASE("standardizing an AR(1) draw on its training prefix") {
    const tsgen::TimeSeries ts =
        tsgen::gen_ar({{0.8}}, {0.0, 1.0, 42}, 4000, 500);
    const StandardizedSeries s = standardize(ts.values, {0, 3200});
    std::vector<double> train(s.values.begin(), s.values.begin() + 3200);
    CHECK(std::abs(oracles::mean_of(train)) < 1e-9);
    CHECK(std::abs(std::sqrt(oracles::variance_of(train)) - 1.0) < 1e-9);
}

TEST_CASE("destandardize inverts standardize within 1e-12") {
    const tsgen::TimeSeries ts =
        tsgen::gen_ar({{0.5}}, {1.0, 2.0, 7}, 500, 50);
    const StandardizedSeries s = standardize(ts.values, {0, 400});
    const std::vector<double> back = destandardize(s.values, s.mean, s.std);
    REQUIRE(back.size() == ts.values.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(std::abs(back[i] - ts.values[i]) < 1e-12);
    }
}

TEST_CASE("split follows the floor rule") {
    auto [train, test] = split(4000, 0.8);
    CHECK(train == Range{0, 3200});
    CHECK(test == Range{3200, 4000});

    auto [small_train, small_test] = split(10, 0.8);
    CHECK(small_train.length() == 8);
    CHECK(small_test.length() == 2);
}

TEST_CASE("split validates the windowing requirement") {
    CHECK_THROWS_AS(split(10, 0.8, 6), InsufficientDataError); // T=5, H=1
    CHECK_NOTHROW(split(100, 0.8, 6));
    CHECK_THROWS_AS(split(100, 1.5, 0), ConfigError);
}

TEST_CASE("make_samples window layout, T=5 H=1") {
    std::vector<double> values(10);
    for (std::size_t i = 0; i < 10; ++i) values[i] = double(i + 1);

    const SampleSet s = make_samples(values, 5, 1);
    CHECK(s.n == 5);
    CHECK(s.X.rows() == 5);
    CHECK(s.Y.rows() == 1);
    for (std::size_t t = 0; t < 5; ++t) {
        CHECK(s.X(t, 0) == double(t + 1));
    }
    CHECK(s.Y(0, 0) == 6.0);
    CHECK(s.X(0, 4) == 5.0);
    CHECK(s.Y(0, 4) == 10.0);
}

TEST_CASE("make_samples boundary: exactly one window") {
    std::vector<double> values = {1, 2, 3, 4, 5, 6};
    const SampleSet s = make_samples(values, 5, 1);
    CHECK(s.n == 1);
    CHECK(s.Y(0, 0) == 6.0);
}

TEST_CASE("make_samples with a two-step horizon") {
    std::vector<double> values(10);
    for (std::size_t i = 0; i < 10; ++i) values[i] = double(i + 1);
    const SampleSet s = make_samples(values, 5, 2);
    CHECK(s.n == 4);
    // last valid sample: input 4..8, outputs 9, 10
    CHECK(s.X(0, 3) == 4.0);
    CHECK(s.X(4, 3) == 8.0);
    CHECK(s.Y(0, 3) == 9.0);
    CHECK(s.Y(1, 3) == 10.0);
}

TEST_CASE("make_samples rejects short segments") {
    std::vector<double> values = {1, 2, 3};
    CHECK_THROWS_AS(make_samples(values, 5, 1), InsufficientDataError);
}

TEST_CASE("window count formula holds exhaustively for L <= 50") {
    for (std::size_t L = 2; L <= 50; ++L) {
        std::vector<double> values(L, 0.0);
        for (std::size_t i = 0; i < L; ++i) values[i] = double(i);
        for (std::size_t T = 1; T <= L; ++T) {
            for (std::size_t H = 1; T + H <= L; ++H) {
                const SampleSet s = make_samples(values, T, H);
                CHECK(s.n == L - T - H + 1);
            }
        }
    }
}

TEST_CASE("windows cover the whole segment and agree with the source") {
    std::vector<double> values(40);
    Rng rng(4);
    for (double &v : values) v = rng.next_normal();
    const SampleSet s = make_samples(values, 7, 2);

    std::vector<int> touched(values.size(), 0);
    for (std::size_t i = 0; i < s.n; ++i) {
        for (std::size_t t = 0; t < s.T; ++t) {
            CHECK(s.X(t, i) == values[i + t]);
            ++touched[i + t];
        }
        for (std::size_t k = 0; k < s.H; ++k) {
            CHECK(s.Y(k, i) == values[i + s.T + k]);
            ++touched[i + s.T + k];
        }
    }
    for (int count : touched) CHECK(count > 0);
}

TEST_CASE("training windows never read test indices") {
    std::vector<double> values(100);
    for (std::size_t i = 0; i < 100; ++i) values[i] = double(i);
    auto [train, test] = split(values.size(), 0.8, 11);
    const std::span<const double> all(values);
    const SampleSet s =
        make_samples(all.subspan(train.begin, train.length()), 10, 1,
                     train.begin);
    std::size_t max_index = 0;
    for (std::size_t i = 0; i < s.n; ++i) {
        max_index = std::max(max_index, s.target_index(i) + s.H - 1);
    }
    CHECK(max_index < test.begin);
}

TEST_CASE("sample set CSV export carries the declared header") {
    std::vector<double> values = {1, 2, 3, 4, 5, 6, 7};
    const SampleSet s = make_samples(values, 3, 2);
    const std::string path = "/tmp/rnndcor_samples_test.csv";
    save_samples_csv(s, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x1,x2,x3,y1,y2");
    std::string first;
    std::getline(in, first);
    CHECK(first == "1,2,3,4,5");
    std::remove(path.c_str());
}
