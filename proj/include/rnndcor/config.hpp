#ifndef RNNDCOR_CONFIG_HPP
#define RNNDCOR_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rnndcor/rnn.hpp"
#include "rnndcor/tsgen.hpp"

namespace rnndcor::exp {

enum class ProcessType { Ar, Ma, Arma, Garch, Csv };

const char *process_type_name(ProcessType t);

/// Declarative description of the data source for an experiment. Empty
/// coefficient vectors plus a positive order select the default scheme
/// (see default_ar_coeffs / default_ma_coeffs / default_garch_params).
struct ProcessSpec {
    ProcessType type = ProcessType::Ar;

    std::vector<double> ar_coeffs;
    std::size_t ar_order = 1;
    std::vector<double> ma_coeffs;
    std::size_t ma_order = 1;
    double delta = 0.0;
    tsgen::MaForm ma_form = tsgen::MaForm::Standard;

    double alpha0 = 0.1;
    std::vector<double> alpha;
    std::size_t garch_p = 2;
    std::vector<double> beta;
    std::size_t garch_q = 2;
    tsgen::GarchForm garch_form = tsgen::GarchForm::Standard;

    tsgen::NoiseSpec noise; // seed is overridden per run by the runner

    std::size_t length = 4000;
    std::size_t burn_in = 500;

    std::string csv_path;
    std::size_t csv_column = 0;
    std::string csv_delimiter = ",";
    bool csv_has_header = false;
    std::size_t csv_row_begin = 0;
    std::size_t csv_row_end = 0;

    /// Fill empty coefficient vectors from the orders, then freeze orders
    /// to the vector lengths. Keeps config echoes fully explicit.
    void resolve_defaults();

    /// Display name like "AR(5)" or "ARMA(10,1)".
    std::string display_name() const;

    tsgen::TimeSeries generate(std::uint64_t seed) const;
};

/// Single dominant coefficient 0.99 at the largest lag. The reference
/// results this tool reproduces imply that magnitude through the
/// standardized-MSE floor 1 - c^2 (0.025 for the first-order process)
/// and match it across orders.
std::vector<double> default_ar_coeffs(std::size_t p);

/// theta_q = 0.8 at the largest lag.
std::vector<double> default_ma_coeffs(std::size_t q);

/// alpha0 = 0.1, mass 0.4 split evenly across each coefficient family.
void default_garch_params(std::size_t p, std::size_t q,
                          std::vector<double> &alpha,
                          std::vector<double> &beta);

struct ExperimentConfig {
    ProcessSpec process;
    double split_ratio = 0.8;
    bool standardize_on_full = false; // default: fit stats on train only
    std::string profile_on = "test";  // "test" or "train"
    rnn::RnnConfig net;
    std::size_t runs = 5;
    std::uint64_t base_seed = 1;
    std::string output_dir; // empty: $RNNDCOR_OUT, else "."
    std::size_t subsample_cap = 0; // cap dcor inputs at this many columns
    int report_precision = 0;      // decimals of the rounded loss percent
    std::size_t threads = 0;       // 0 = hardware concurrency

    void validate() const;
};

struct HeatmapConfig {
    ProcessSpec process; // shared series for both models
    double split_ratio = 0.8;
    bool standardize_on_full = false;
    rnn::RnnConfig net_a;
    rnn::RnnConfig net_b;
    bool net_a_seed_set = false; // explicit seeds survive; others derive
    bool net_b_seed_set = false;
    std::uint64_t base_seed = 1;
    std::string output_dir;
    std::size_t subsample_cap = 0;
};

struct SweepConfig {
    ExperimentConfig base;
    // axis name -> values; valid axes: hidden_units, learning_rate,
    // dropout_final, window, activation, epochs
    std::map<std::string, std::vector<nlohmann::json>> axes;
};

void to_json(nlohmann::json &j, const ProcessSpec &p);
void from_json(const nlohmann::json &j, ProcessSpec &p);
void to_json(nlohmann::json &j, const ExperimentConfig &c);
void from_json(const nlohmann::json &j, ExperimentConfig &c);
void to_json(nlohmann::json &j, const HeatmapConfig &c);
void from_json(const nlohmann::json &j, HeatmapConfig &c);
void to_json(nlohmann::json &j, const SweepConfig &c);
void from_json(const nlohmann::json &j, SweepConfig &c);

/// Apply a dotted-path override like "process.length=2000" or
/// "rnn.activation=tanh" onto a config document. The value text is
/// parsed as JSON when possible and kept as a string otherwise;
/// colon-separated numeric lists ("0:0:0.8") become arrays.
void apply_override(nlohmann::json &doc, const std::string &path,
                    const std::string &value);

nlohmann::json parse_json_text(const std::string &text,
                               const std::string &what);

/// Default output directory: $RNNDCOR_OUT when set, else ".".
std::string default_output_dir();

} // namespace rnndcor::exp

#endif
