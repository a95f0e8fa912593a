#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/rng.hpp"
#include "rnndcor/svg.hpp"

using namespace rnndcor;

namespace {

std::size_t count_occurrences(const std::string &text,
                              const std::string &needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("empty inputs are refused before rendering") {
    CHECK_THROWS_AS(svg::render_bar_chart({}, {}, {}, {}), ConfigError);
    CHECK_THROWS_AS(svg::render_heatmap(Matrix(), "a", "b", {}), ConfigError);
    CHECK_THROWS_AS(svg::render_forecast_overlay({}, {}, {}), ConfigError);
    CHECK_THROWS_AS(svg::render_forecast_overlay({1.0}, {1.0, 2.0}, {}),
                    ConfigError);
}

TEST_CASE("a 20-layer profile renders 20 bars per series") {
    std::vector<double> dcor(20), acf(20);
    std::vector<std::size_t> lags(20);
    Rng rng(1);
    for (std::size_t t = 0; t < 20; ++t) {
        dcor[t] = rng.next_uniform();
        acf[t] = rng.next_uniform();
        lags[t] = 20 - t;
    }
    const auto chart = svg::render_bar_chart(dcor, acf, lags, {"caption"});
    CHECK(chart.kind == svg::ChartKind::BarProfile);
    CHECK(count_occurrences(chart.xml, "class=\"dcor\"") == 20);
    CHECK(count_occurrences(chart.xml, "class=\"acf\"") == 20);
    CHECK(chart.xml.find("<svg") == 0);
    CHECK(chart.xml.find("</svg>") != std::string::npos);
}

TEST_CASE("bar chart data-value attributes equal the CSV formatting") {
    const std::vector<double> dcor = {0.123456789012345, 1.0 / 3.0};
    const std::vector<double> acf = {0.5, 0.25};
    const std::vector<std::size_t> lags = {2, 1};
    const auto chart = svg::render_bar_chart(dcor, acf, lags, {});
    for (double v : dcor) {
        const std::string expected =
            "data-value=\"" + csvio::format_double(v) + "\"";
        CHECK(chart.xml.find(expected) != std::string::npos);
    }
}

TEST_CASE("a 10x10 grid renders 100 cells and the unit legend") {
    Matrix grid(10, 10);
    Rng rng(2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.data()[i] = rng.next_uniform();
    }
    const auto chart = svg::render_heatmap(grid, "rows", "cols", {"note"});
    CHECK(chart.kind == svg::ChartKind::Heatmap);
    CHECK(count_occurrences(chart.xml, "class=\"cell\"") == 100);
    CHECK(chart.xml.find(">1</text>") != std::string::npos);
    CHECK(chart.xml.find(">0</text>") != std::string::npos);
}

TEST_CASE("renders are deterministic") {
    std::vector<double> dcor = {0.1, 0.7, 0.3};
    std::vector<double> acf = {0.2, 0.4, 0.9};
    std::vector<std::size_t> lags = {3, 2, 1};
    const auto a = svg::render_bar_chart(dcor, acf, lags, {"x"});
    const auto b = svg::render_bar_chart(dcor, acf, lags, {"x"});
    CHECK(a.xml == b.xml);
}

TEST_CASE("forecast overlay renders both polylines") {
    std::vector<double> actual = {1.0, 2.0, 1.5, 3.0};
    std::vector<double> predicted = {1.1, 1.9, 1.6, 2.8};
    const auto chart = svg::render_forecast_overlay(actual, predicted, {});
    CHECK(count_occurrences(chart.xml, "<polyline") == 2);
    CHECK(chart.xml.find("class=\"actual\"") != std::string::npos);
    CHECK(chart.xml.find("class=\"predicted\"") != std::string::npos);
}
