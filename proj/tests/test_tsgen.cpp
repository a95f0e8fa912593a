#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/estat.hpp"
#include "rnndcor/tsgen.hpp"

using namespace rnndcor;
using namespace rnndcor::tsgen;

namespace {

NoiseSpec noise(std::uint64_t seed, double mean = 0.0, double std = 1.0) {
    return NoiseSpec{mean, std, seed};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string &content) {
        path = std::string("/tmp/rnndcor_test_") +
               std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".csv";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("stationarity gate") {
    CHECK(is_stationary({0.99}));
    CHECK_FALSE(is_stationary({1.0}));
    CHECK(is_stationary({}));
    CHECK(is_stationary({0.0, 0.0, 0.8}));
    CHECK_FALSE(is_stationary({0.5, 0.5})); // unit root: 1 - 0.5x - 0.5x^2
    CHECK(is_stationary({0.5, 0.49}));
    CHECK_FALSE(is_stationary({0.0, 0.0, 1.2}));

    CHECK_THROWS_AS(gen_ar({{1.0}}, noise(1), 100, 0), StationarityError);
    CHECK_NOTHROW(gen_ar({{0.99}}, noise(1), 100, 0));
}

TEST_CASE("gen_ar with zero coefficients is white noise") {
    const TimeSeries ts = gen_ar({{0.0, 0.0, 0.0}}, noise(11), 4000, 500);
    const auto acf = estat::acf(ts.values, 20);
    const double band = 3.0 / std::sqrt(4000.0);
    for (std::size_t h = 1; h <= 20; ++h) {
        CHECK(std::abs(acf[h]) < band);
    }
}

TEST_CASE("gen_ar with a single lag-7 coefficient peaks at lags 7 and 14") {
    ArParams params;
    params.coeffs = {0, 0, 0, 0, 0, 0, 0.8};
    const TimeSeries ts = gen_ar(params, noise(5), 4000, 500);
    const auto acf = estat::acf(ts.values, 16);
    CHECK(acf[7] > acf[6]);
    CHECK(acf[7] > acf[8]);
    CHECK(acf[14] > acf[13]);
    CHECK(acf[14] > acf[15]);
    CHECK(acf[7] > 0.5);
}

TEST_CASE("gen_ar AR(1) sample ACF tracks the analytic c^h") {
    std::vector<double> mean_acf(6, 0.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TimeSeries ts = gen_ar({{0.8}}, noise(300 + seed), 4000, 500);
        const auto acf = estat::acf(ts.values, 5);
        for (std::size_t h = 1; h <= 5; ++h) mean_acf[h] += acf[h] / 20.0;
    }
    for (std::size_t h = 1; h <= 5; ++h) {
        CHECK(std::abs(mean_acf[h] - std::pow(0.8, double(h))) < 0.05);
    }
}

TEST_CASE("gen_ar rejects too-short lengths") {
    CHECK_THROWS_AS(gen_ar({{0.5}}, noise(1), 1, 0), InvalidLengthError);
}

TEST_CASE("generation is deterministic in all inputs") {
    const TimeSeries a = gen_ar({{0.7}}, noise(99), 500, 100);
    const TimeSeries b = gen_ar({{0.7}}, noise(99), 500, 100);
    CHECK(a.values == b.values);
    const TimeSeries c = gen_ar({{0.7}}, noise(98), 500, 100);
    CHECK(a.values != c.values);
}

TEST_CASE("burn-in removes the start-up transient") {
    // Nonzero noise mean: the process mean is mu/(1-c) = 5, but the
    // recursion starts at 0, so early unburned values sit well below it.
    double burned_diff = 0.0;
    double unburned_diff = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TimeSeries burned =
            gen_ar({{0.8}}, noise(700 + seed, 1.0), 4000, 500);
        const TimeSeries raw =
            gen_ar({{0.8}}, noise(700 + seed, 1.0), 4000, 0);
        auto segment_mean = [](const std::vector<double> &v, std::size_t from,
                               std::size_t count) {
            double acc = 0.0;
            for (std::size_t i = from; i < from + count; ++i) acc += v[i];
            return acc / static_cast<double>(count);
        };
        burned_diff += (segment_mean(burned.values, 0, 100) -
                        segment_mean(burned.values, 3900, 100)) /
                       20.0;
        unburned_diff += (segment_mean(raw.values, 0, 50) -
                          segment_mean(raw.values, 3950, 50)) /
                         20.0;
    }
    CHECK(std::abs(burned_diff) < 0.2);
    CHECK(std::abs(unburned_diff) > 0.2); // the transient is visible unburned
}

TEST_CASE("gen_ma with no coefficients and delta 5 is constant") {
    const TimeSeries ts = gen_ma({{}, 5.0, MaForm::Printed}, noise(3), 50, 10);
    for (double v : ts.values) CHECK(v == 5.0);
}

TEST_CASE("gen_ma MA(1) ACF cuts off after lag 1") {
    std::vector<double> mean_abs(21, 0.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TimeSeries ts =
            gen_ma({{0.8}, 0.0, MaForm::Standard}, noise(40 + seed), 4000, 500);
        const auto acf = estat::acf(ts.values, 20);
        for (std::size_t h = 2; h <= 20; ++h) {
            mean_abs[h] += std::abs(acf[h]) / 20.0;
        }
    }
    const double band = 3.0 / std::sqrt(4000.0);
    for (std::size_t h = 2; h <= 20; ++h) CHECK(mean_abs[h] < band);
}

TEST_CASE("printed MA variance is sigma^2 * sum(theta^2)") {
    MaParams params;
    params.coeffs.assign(20, 0.3);
    params.coeffs[19] = 0.8;
    params.form = MaForm::Printed;
    double theta_sq = 0.0;
    for (double t : params.coeffs) theta_sq += t * t;
    const double expected_std = std::sqrt(theta_sq);

    const TimeSeries ts = gen_ma(params, noise(8), 4000, 500);
    const double sample_std = std::sqrt(oracles::variance_of(ts.values));
    CHECK(std::abs(sample_std - expected_std) / expected_std < 0.10);
}

TEST_CASE("printed MA omits the contemporaneous noise term") {
    // With a single lag-1 coefficient the printed series is lagged noise
    // only, so it is serially uncorrelated even at lag 1; the standard
    // form shows the textbook theta/(1+theta^2) correlation.
    const TimeSeries printed =
        gen_ma({{0.8}, 0.0, MaForm::Printed}, noise(14), 4000, 500);
    const TimeSeries standard =
        gen_ma({{0.8}, 0.0, MaForm::Standard}, noise(14), 4000, 500);
    const double r1_printed = estat::acf(printed.values, 1)[1];
    const double r1_standard = estat::acf(standard.values, 1)[1];
    CHECK(std::abs(r1_printed) < 3.0 / std::sqrt(4000.0));
    CHECK(r1_standard == doctest::Approx(0.8 / (1.0 + 0.64)).epsilon(0.1));
}

TEST_CASE("gen_arma reduces to gen_ma when the AR side is zero") {
    for (const MaForm form : {MaForm::Printed, MaForm::Standard}) {
        const MaParams ma{{0.4, 0.2}, 0.5, form};
        const TimeSeries pure = gen_ma(ma, noise(21), 800, 100);
        const TimeSeries combined =
            gen_arma({{0.0, 0.0}}, ma, noise(21), 800, 100);
        CHECK(combined.values == pure.values);
    }
}

TEST_CASE("gen_arma reduces to gen_ar when the MA side is zero "
          "(standard form)") {
    // The reduction needs the contemporaneous noise term; the printed MA
    // form has none, so with a zeroed MA side it degenerates to the
    // noiseless recursion instead of an AR draw.
    const TimeSeries pure = gen_ar({{0.6, 0.2}}, noise(33), 800, 100);
    const TimeSeries combined = gen_arma(
        {{0.6, 0.2}}, {{0.0}, 0.0, MaForm::Standard}, noise(33), 800, 100);
    CHECK(combined.values == pure.values);

    const TimeSeries printed = gen_arma(
        {{0.6, 0.2}}, {{0.0}, 0.0, MaForm::Printed}, noise(33), 800, 100);
    for (double v : printed.values) CHECK(v == 0.0);
}

TEST_CASE("ARMA(1,1) sample ACF matches the closed form") {
    // rho(1) = (1+c*theta)(c+theta) / (1+theta^2+2*c*theta) for the
    // standard recursion; c = theta = 0.5 gives 1.25/1.75 = 5/7.
    const double c = 0.5, theta = 0.5;
    const double analytic =
        (1.0 + c * theta) * (c + theta) / (1.0 + theta * theta + 2 * c * theta);
    CHECK(analytic == doctest::Approx(5.0 / 7.0).epsilon(1e-12));

    double mean_r1 = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TimeSeries ts =
            gen_arma({{c}}, {{theta}, 0.0, MaForm::Standard},
                     noise(500 + seed), 4000, 500);
        mean_r1 += estat::acf(ts.values, 1)[1] / 20.0;
    }
    CHECK(std::abs(mean_r1 - analytic) < 0.05);
}

TEST_CASE("gen_arma validates stationarity of the AR side") {
    CHECK_THROWS_AS(
        gen_arma({{1.01}}, {{0.5}, 0.0, MaForm::Printed}, noise(1), 100, 0),
        StationarityError);
}

TEST_CASE("gen_garch with zero coefficients is unit-variance noise") {
    GarchParams params;
    params.alpha0 = 1.0;
    params.alpha = {0.0};
    params.beta = {0.0};
    const TimeSeries garch = gen_garch(params, noise(77), 500, 100);
    // h_l = 1 throughout, so z_l = eps_l exactly.
    const TimeSeries white = gen_ar({{}}, noise(77), 500, 100);
    CHECK(garch.values == white.values);
}

TEST_CASE("GARCH(2,2) draw is uncorrelated but squares are not") {
    GarchParams params;
    params.alpha0 = 0.1;
    params.alpha = {0.2, 0.1};
    params.beta = {0.3, 0.2};
    params.form = GarchForm::Standard; // the printed recursion can leave
                                       // the stable range at this length
    const double band = 3.0 / std::sqrt(4000.0);

    std::vector<double> mean_abs(21, 0.0);
    double mean_sq_r1 = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TimeSeries ts = gen_garch(params, noise(600 + seed), 4000, 500);
        const auto acf = estat::acf(ts.values, 20);
        for (std::size_t h = 1; h <= 20; ++h) {
            mean_abs[h] += std::abs(acf[h]) / 20.0;
        }
        std::vector<double> sq(ts.values.size());
        for (std::size_t i = 0; i < sq.size(); ++i) {
            sq[i] = ts.values[i] * ts.values[i];
        }
        mean_sq_r1 += estat::acf(sq, 1)[1] / 20.0;
    }
    for (std::size_t h = 1; h <= 20; ++h) CHECK(mean_abs[h] < band);
    CHECK(mean_sq_r1 > band);
}

TEST_CASE("GARCH variance stays positive for valid parameters") {
    GarchParams params;
    params.alpha0 = 0.05;
    params.alpha = {0.3, 0.1};
    params.beta = {0.2, 0.1};
    params.form = GarchForm::Standard;
    std::vector<double> variance;
    gen_garch(params, noise(9), 2000, 200, &variance);
    REQUIRE(variance.size() == 2000);
    for (double h : variance) CHECK(h > 0.0);
}

TEST_CASE("GARCH constraint violations are rejected") {
    GarchParams bad0;
    bad0.alpha0 = 0.0;
    bad0.alpha = {0.1};
    bad0.beta = {0.1};
    CHECK_THROWS_AS(gen_garch(bad0, noise(1), 100, 0), GarchConstraintError);

    GarchParams negative;
    negative.alpha0 = 0.1;
    negative.alpha = {-0.1};
    negative.beta = {0.1};
    CHECK_THROWS_AS(gen_garch(negative, noise(1), 100, 0),
                    GarchConstraintError);

    GarchParams heavy;
    heavy.alpha0 = 0.1;
    heavy.alpha = {0.6};
    heavy.beta = {0.5};
    CHECK_THROWS_AS(gen_garch(heavy, noise(1), 100, 0), GarchConstraintError);
}

TEST_CASE("printed GARCH flags runaway variance with the step index") {
    // alpha0 = 5 with a squared lagged-variance term has no finite fixed
    // point, so the recursion must abort rather than emit infinities.
    GarchParams params;
    params.alpha0 = 5.0;
    params.alpha = {};
    params.beta = {0.15};
    params.form = GarchForm::Printed;
    try {
        gen_garch(params, noise(2), 1000, 0);
        FAIL("expected NumericalInstabilityError");
    } catch (const NumericalInstabilityError &e) {
        CHECK(std::string(e.what()).find("step") != std::string::npos);
    }
}

TEST_CASE("load_csv reads a plain column") {
    TempFile file("1.0\n2.0\n3.0\n");
    const TimeSeries ts = load_csv(file.path);
    CHECK(ts.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(ts.origin == SeriesOrigin::Csv);
    CHECK(ts.params.at("rows").get<std::size_t>() == 3);
}

TEST_CASE("load_csv honors the header flag") {
    TempFile file("value\n1.5\n2.5\n");
    CsvOptions options;
    options.has_header = true;
    const TimeSeries ts = load_csv(file.path, options);
    CHECK(ts.values == std::vector<double>{1.5, 2.5});
}

TEST_CASE("load_csv reports the bad row") {
    std::string content;
    for (int i = 1; i <= 30; ++i) {
        content += i == 17 ? "abc\n" : "1.25\n";
    }
    TempFile file(content);
    try {
        load_csv(file.path);
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("17") != std::string::npos);
    }
}

TEST_CASE("load_csv picks delimited columns and quoted fields") {
    TempFile file("a;\"1,5\";2.0\nb;3.5;4.0\nc;5.5;6.0\n");
    CsvOptions options;
    options.delimiter = ';';
    options.column = 2;
    const TimeSeries ts = load_csv(file.path, options);
    CHECK(ts.values == std::vector<double>{2.0, 4.0, 6.0});
}

TEST_CASE("load_csv errors on missing files and short files") {
    CHECK_THROWS_AS(load_csv("/nonexistent/path.csv"), IoError);
    TempFile file("1.0\n");
    CHECK_THROWS_AS(load_csv(file.path), InsufficientDataError);
}

TEST_CASE("save_csv round-trips through load_csv") {
    const TimeSeries ts = gen_ar({{0.5}}, noise(12), 50, 10);
    TempFile file("");
    save_csv(ts, file.path, true);
    CsvOptions options;
    options.has_header = true;
    const TimeSeries back = load_csv(file.path, options);
    CHECK(back.values == ts.values);
}
