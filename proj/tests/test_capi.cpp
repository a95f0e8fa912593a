#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "rnndcor.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string &name)
        : path(fs::path("/tmp") / ("rnndcor_capi_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string take_string(char *raw) {
    REQUIRE(raw != nullptr);
    std::string out(raw);
    rd_string_free(raw);
    return out;
}

} // namespace

TEST_CASE("version and error bookkeeping") {
    CHECK(std::strlen(rd_version()) > 0);
    CHECK(std::string(rd_last_error()).empty());
}

TEST_CASE("series lifecycle through the C surface") {
    rd_series *series = nullptr;
    const char *spec = R"({"type":"ar","ar_coeffs":[0.8],"length":500,
                           "burn_in":100,"noise":{"seed":11}})";
    REQUIRE(rd_series_generate(spec, &series) == RD_OK);
    REQUIRE(series != nullptr);
    CHECK(rd_series_length(series) == 500);

    std::vector<double> values(500);
    CHECK(rd_series_values(series, values.data(), values.size()) == 500);

    char *params_raw = nullptr;
    REQUIRE(rd_series_params_json(series, &params_raw) == RD_OK);
    const auto params = nlohmann::json::parse(take_string(params_raw));
    CHECK(params["origin"] == "ar");
    CHECK(params["seed"] == 11);
    CHECK(params["rows"] == 500);

    TempDir dir("series");
    const std::string csv_path = (dir.path / "series.csv").string();
    REQUIRE(rd_series_save_csv(series, csv_path.c_str(), 1) == RD_OK);

    rd_series *loaded = nullptr;
    REQUIRE(rd_series_load_csv(csv_path.c_str(), R"({"has_header":true})",
                               &loaded) == RD_OK);
    CHECK(rd_series_length(loaded) == 500);
    std::vector<double> reloaded(500);
    rd_series_values(loaded, reloaded.data(), reloaded.size());
    CHECK(reloaded == values);

    rd_series_free(series);
    rd_series_free(loaded);
}

TEST_CASE("generation errors carry status codes and messages") {
    rd_series *series = nullptr;
    const rd_status bad_json = rd_series_generate("{not json", &series);
    CHECK(bad_json == RD_ERR_ARGUMENT);
    CHECK(std::string(rd_last_error()).find("JSON") != std::string::npos);

    const rd_status unstable = rd_series_generate(
        R"({"type":"ar","ar_coeffs":[1.0],"length":100})", &series);
    CHECK(unstable == RD_ERR_ARGUMENT);
    CHECK(std::string(rd_last_error()).find("stationarity") !=
          std::string::npos);

    const rd_status missing =
        rd_series_load_csv("/no/such/file.csv", nullptr, &series);
    CHECK(missing == RD_ERR_IO);
}

TEST_CASE("acf and the significance band") {
    std::vector<double> values(400);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = std::sin(0.3 * double(i));
    }
    std::vector<double> acf(11);
    REQUIRE(rd_acf(values.data(), values.size(), 10, acf.data()) == RD_OK);
    CHECK(acf[0] == 1.0);
    CHECK(std::abs(acf[1]) > 0.5); // smooth sinusoid, strong lag-1 correlation

    CHECK(rd_acf_significance_band(400) == doctest::Approx(0.098));
    CHECK(rd_acf_significance_band(1) < 0.0);
}

TEST_CASE("dcor over flat buffers") {
    // y = 2x + 3 on scalar columns 1..10: distance correlation 1.
    std::vector<double> x(10), y(10);
    for (std::size_t i = 0; i < 10; ++i) {
        x[i] = double(i + 1);
        y[i] = 2.0 * x[i] + 3.0;
    }
    double r = 0.0;
    REQUIRE(rd_dcor(x.data(), 1, y.data(), 1, 10, &r) == RD_OK);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-9));

    double r2 = 0.0;
    REQUIRE(rd_dcor_squared(x.data(), 1, y.data(), 1, 10, &r2) == RD_OK);
    CHECK(r2 == doctest::Approx(r * r).epsilon(1e-9));

    CHECK(rd_dcor(nullptr, 1, y.data(), 1, 10, &r) == RD_ERR_ARGUMENT);
}

TEST_CASE("experiment drivers run through the C API") {
    TempDir dir("run");
    nlohmann::json config = {
        {"process",
         {{"type", "ar"}, {"ar_coeffs", {0.8}}, {"length", 400},
          {"burn_in", 100}}},
        {"rnn",
         {{"window", 6}, {"hidden_units", 8}, {"epochs", 2},
          {"batch_size", 32}, {"learning_rate", 1e-3}}},
        {"runs", 1},
        {"seed", 4},
        {"threads", 1},
        {"output_dir", dir.path.string()}};

    char *raw = nullptr;
    REQUIRE(rd_cmd_run(config.dump().c_str(), &raw) == RD_OK);
    const auto result = nlohmann::json::parse(take_string(raw));
    CHECK(result["summary"].contains("final_r"));
    CHECK(result["summary"].contains("info_loss_pct"));
    CHECK(fs::exists(dir.path / "run_summary.json"));

    char *sim_raw = nullptr;
    REQUIRE(rd_cmd_simulate(config.dump().c_str(), &sim_raw) == RD_OK);
    const auto sim = nlohmann::json::parse(take_string(sim_raw));
    CHECK(sim["aggregate"]["run_count"] == 1);

    char *report_raw = nullptr;
    REQUIRE(rd_cmd_report((dir.path / "run_summary.json").string().c_str(),
                          dir.path.string().c_str(), &report_raw) == RD_OK);
    take_string(report_raw);
}

TEST_CASE("driver failures map to the documented status codes") {
    CHECK(rd_cmd_run("{bad", nullptr) == RD_ERR_ARGUMENT);
    CHECK(rd_cmd_run(R"({"process":{"type":"ar","ar_coeffs":[1.5]}})",
                     nullptr) == RD_ERR_ARGUMENT);
    CHECK(rd_cmd_report("/no/such/summary.json", "/tmp", nullptr) ==
          RD_ERR_IO);
}
