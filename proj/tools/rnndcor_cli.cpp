// Command-line front end. Everything goes through the C API in
// rnndcor.h: flags are folded into the JSON configuration document the
// library consumes, then one rd_cmd_* call does the work.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rnndcor.h"

namespace {

using nlohmann::json;

int exit_code_for(rd_status status) {
    switch (status) {
    case RD_OK: return 0;
    case RD_ERR_ARGUMENT:
    case RD_ERR_DATA:
    case RD_ERR_IO: return 2; // caller problem
    default: return 1;        // numerical / internal failure
    }
}

json parse_colon_list(const std::string &text) {
    json list = json::array();
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t stop = text.find(':', start);
        const std::string item =
            text.substr(start, stop == std::string::npos ? std::string::npos
                                                         : stop - start);
        try {
            list.push_back(std::stod(item));
        } catch (const std::exception &) {
            throw CLI::ValidationError("coefficient list",
                                       "cannot parse '" + item + "'");
        }
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return list;
}

void set_path(json &doc, const std::string &path, const json &value) {
    json *node = &doc;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = path.find('.', start);
        const std::string key =
            path.substr(start, dot == std::string::npos ? std::string::npos
                                                        : dot - start);
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

// --set key=value and bare --a.b=c extras share this: the value text is
// parsed as JSON when possible, colon lists become arrays, anything else
// stays a string.
void apply_override_text(json &doc, const std::string &assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw CLI::ValidationError("--set", "expected key=value, got '" +
                                                assignment + "'");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    json value;
    if (text.find(':') != std::string::npos &&
        text.find_first_not_of("0123456789.:+-eE") == std::string::npos) {
        value = parse_colon_list(text);
    } else {
        value = json::parse(text, nullptr, false);
        if (value.is_discarded()) value = text;
    }
    set_path(doc, key, value);
}

struct CommonFlags {
    std::string config_file;
    std::string output_dir;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

struct ProcessFlags {
    std::optional<std::string> process;
    std::optional<std::string> coeffs;
    std::optional<std::string> ar_coeffs;
    std::optional<std::string> ma_coeffs;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<double> alpha0;
    std::optional<double> delta;
    std::optional<std::size_t> order;
    std::optional<std::size_t> length;
    std::optional<std::size_t> burn_in;
    std::optional<double> noise_mean;
    std::optional<double> noise_std;
    bool standard_form = false;
    bool printed_form = false;
    std::optional<std::string> csv_path;
    std::optional<std::size_t> csv_column;
    bool csv_header = false;
};

struct NetFlags {
    std::optional<std::size_t> window;
    std::optional<std::size_t> hidden;
    std::optional<std::string> activation;
    std::optional<double> lr;
    std::optional<std::size_t> batch;
    std::optional<std::size_t> epochs;
    std::optional<double> dropout;
    std::optional<std::string> optimizer;
    std::optional<double> grad_clip;
    std::optional<std::string> recurrent_init;
};

struct RunFlags {
    std::optional<std::size_t> runs;
    std::optional<double> split;
    std::optional<std::size_t> threads;
    std::optional<std::size_t> subsample;
    std::optional<std::string> profile_on;
    std::optional<std::string> standardize_on;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--config", flags.config_file,
                    "JSON configuration file (flags override it)");
    cmd->add_option("--out", flags.output_dir,
                    "output directory (default: $RNNDCOR_OUT or '.')");
    cmd->add_option("--seed", flags.seed, "base seed");
    cmd->add_option("--set", flags.overrides,
                    "dotted-path override, e.g. --set process.length=2000")
        ->take_all();
    cmd->add_flag("--quiet", flags.quiet,
                  "suppress the result JSON on stdout");
}

void add_process(CLI::App *cmd, ProcessFlags &flags) {
    cmd->add_option("--process", flags.process,
                    "process type: ar|ma|arma|garch|csv");
    cmd->add_option("--coeffs", flags.coeffs,
                    "colon-separated coefficients, e.g. 0:0:0:0:0:0.8");
    cmd->add_option("--ar-coeffs", flags.ar_coeffs,
                    "AR coefficients for arma");
    cmd->add_option("--ma-coeffs", flags.ma_coeffs,
                    "MA coefficients for arma");
    cmd->add_option("--alpha", flags.alpha, "GARCH alpha coefficients");
    cmd->add_option("--beta", flags.beta, "GARCH beta coefficients");
    cmd->add_option("--alpha0", flags.alpha0, "GARCH alpha0");
    cmd->add_option("--delta", flags.delta, "MA process mean");
    cmd->add_option("--order", flags.order,
                    "process order when coefficients are left to defaults");
    cmd->add_option("--len", flags.length, "series length");
    cmd->add_option("--burn-in", flags.burn_in, "discarded warm-up steps");
    cmd->add_option("--noise-mean", flags.noise_mean, "white noise mean");
    cmd->add_option("--noise-std", flags.noise_std, "white noise std");
    cmd->add_flag("--standard-form", flags.standard_form,
                  "textbook MA/GARCH recursions");
    cmd->add_flag("--printed-form", flags.printed_form,
                  "printed-form MA/GARCH recursions (no contemporaneous "
                  "noise term; squared lagged variance)");
    cmd->add_option("--csv", flags.csv_path, "CSV input path");
    cmd->add_option("--csv-column", flags.csv_column, "CSV column index");
    cmd->add_flag("--csv-header", flags.csv_header, "skip a CSV header row");
}

void add_net(CLI::App *cmd, NetFlags &flags, const std::string &suffix = "") {
    auto name = [&suffix](const std::string &base) { return base + suffix; };
    cmd->add_option(name("--window"), flags.window, "input window size T");
    cmd->add_option(name("--hidden"), flags.hidden, "hidden units b");
    cmd->add_option(name("--activation"), flags.activation, "relu|tanh");
    cmd->add_option(name("--lr"), flags.lr, "learning rate");
    cmd->add_option(name("--batch"), flags.batch, "batch size");
    cmd->add_option(name("--epochs"), flags.epochs, "training epochs");
    cmd->add_option(name("--dropout"), flags.dropout,
                    "final-layer dropout rate");
    cmd->add_option(name("--optimizer"), flags.optimizer, "adam|sgd");
    cmd->add_option(name("--grad-clip"), flags.grad_clip,
                    "global-norm gradient clip (0 = off)");
    cmd->add_option(name("--recurrent-init"), flags.recurrent_init,
                    "orthogonal|kaiming");
}

void add_run(CLI::App *cmd, RunFlags &flags) {
    cmd->add_option("--runs", flags.runs, "independent runs");
    cmd->add_option("--split", flags.split, "train fraction (default 0.8)");
    cmd->add_option("--threads", flags.threads,
                    "worker threads (0 = hardware)");
    cmd->add_option("--subsample", flags.subsample,
                    "cap dcor sample columns (0 = off)");
    cmd->add_option("--profile-on", flags.profile_on,
                    "profile segment: test|train");
    cmd->add_option("--standardize-on", flags.standardize_on,
                    "fit z-score on: train|full");
}

json load_base_config(const CommonFlags &common) {
    json doc = json::object();
    if (!common.config_file.empty()) {
        std::ifstream in(common.config_file);
        if (!in) {
            std::cerr << "error: cannot open config file "
                      << common.config_file << "\n";
            std::exit(2);
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        doc = json::parse(buffer.str(), nullptr, false);
        if (doc.is_discarded()) {
            std::cerr << "error: invalid JSON in " << common.config_file
                      << "\n";
            std::exit(2);
        }
    }
    return doc;
}

void fold_process(json &doc, const ProcessFlags &flags) {
    if (flags.process) set_path(doc, "process.type", *flags.process);
    if (flags.coeffs)
        set_path(doc, "process.coeffs", parse_colon_list(*flags.coeffs));
    if (flags.ar_coeffs)
        set_path(doc, "process.ar_coeffs", parse_colon_list(*flags.ar_coeffs));
    if (flags.ma_coeffs)
        set_path(doc, "process.ma_coeffs", parse_colon_list(*flags.ma_coeffs));
    if (flags.alpha)
        set_path(doc, "process.alpha", parse_colon_list(*flags.alpha));
    if (flags.beta)
        set_path(doc, "process.beta", parse_colon_list(*flags.beta));
    if (flags.alpha0) set_path(doc, "process.alpha0", *flags.alpha0);
    if (flags.delta) set_path(doc, "process.delta", *flags.delta);
    if (flags.order) set_path(doc, "process.order", *flags.order);
    if (flags.length) set_path(doc, "process.length", *flags.length);
    if (flags.burn_in) set_path(doc, "process.burn_in", *flags.burn_in);
    if (flags.noise_mean)
        set_path(doc, "process.noise.mean", *flags.noise_mean);
    if (flags.noise_std) set_path(doc, "process.noise.std", *flags.noise_std);
    if (flags.standard_form) {
        set_path(doc, "process.ma_form", "standard");
        set_path(doc, "process.garch_form", "standard");
    }
    if (flags.printed_form) {
        set_path(doc, "process.ma_form", "printed");
        set_path(doc, "process.garch_form", "printed");
    }
    if (flags.csv_path) {
        set_path(doc, "process.type", "csv");
        set_path(doc, "process.csv_path", *flags.csv_path);
    }
    if (flags.csv_column) set_path(doc, "process.csv_column", *flags.csv_column);
    if (flags.csv_header) set_path(doc, "process.csv_has_header", true);
}

void fold_net(json &doc, const NetFlags &flags,
              const std::string &prefix = "rnn") {
    if (flags.window) set_path(doc, prefix + ".window", *flags.window);
    if (flags.hidden) set_path(doc, prefix + ".hidden_units", *flags.hidden);
    if (flags.activation)
        set_path(doc, prefix + ".activation", *flags.activation);
    if (flags.lr) set_path(doc, prefix + ".learning_rate", *flags.lr);
    if (flags.batch) set_path(doc, prefix + ".batch_size", *flags.batch);
    if (flags.epochs) set_path(doc, prefix + ".epochs", *flags.epochs);
    if (flags.dropout)
        set_path(doc, prefix + ".dropout_final", *flags.dropout);
    if (flags.optimizer)
        set_path(doc, prefix + ".optimizer", *flags.optimizer);
    if (flags.grad_clip)
        set_path(doc, prefix + ".grad_clip", *flags.grad_clip);
    if (flags.recurrent_init)
        set_path(doc, prefix + ".recurrent_init", *flags.recurrent_init);
}

void fold_run(json &doc, const RunFlags &flags) {
    if (flags.runs) set_path(doc, "runs", *flags.runs);
    if (flags.split) set_path(doc, "split_ratio", *flags.split);
    if (flags.threads) set_path(doc, "threads", *flags.threads);
    if (flags.subsample) set_path(doc, "subsample_cap", *flags.subsample);
    if (flags.profile_on) set_path(doc, "profile_on", *flags.profile_on);
    if (flags.standardize_on)
        set_path(doc, "standardize_on", *flags.standardize_on);
}

void fold_common(json &doc, const CommonFlags &common) {
    if (common.seed) set_path(doc, "seed", *common.seed);
    if (!common.output_dir.empty())
        set_path(doc, "output_dir", common.output_dir);
    for (const std::string &assignment : common.overrides) {
        apply_override_text(doc, assignment);
    }
}

using Driver = rd_status (*)(const char *, char **);

int dispatch(Driver driver, const json &doc, bool quiet) {
    char *result = nullptr;
    const rd_status status = driver(doc.dump().c_str(), &result);
    if (status != RD_OK) {
        std::cerr << "error: " << rd_last_error() << "\n";
        return exit_code_for(status);
    }
    if (result) {
        if (!quiet) std::cout << result << "\n";
        rd_string_free(result);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"RNN activation-layer analysis for time series "
                 "forecasting, via distance correlation"};
    app.require_subcommand(1);

    CommonFlags common_generate, common_run, common_simulate, common_heatmap,
        common_sweep;
    ProcessFlags proc_generate, proc_run, proc_simulate, proc_heatmap;
    NetFlags net_run, net_simulate, net_a, net_b;
    RunFlags run_run, run_simulate;

    auto *generate = app.add_subcommand(
        "generate", "write a synthetic or CSV-ingested series + sidecar");
    add_common(generate, common_generate);
    add_process(generate, proc_generate);

    auto *run = app.add_subcommand(
        "run", "single training run with profile, forecast and charts");
    add_common(run, common_run);
    add_process(run, proc_run);
    add_net(run, net_run);
    add_run(run, run_run);

    auto *simulate = app.add_subcommand(
        "simulate", "R independent runs, aggregated Table-style results");
    add_common(simulate, common_simulate);
    add_process(simulate, proc_simulate);
    add_net(simulate, net_simulate);
    add_run(simulate, run_simulate);

    auto *heatmap = app.add_subcommand(
        "heatmap", "cross-model activation-layer distance correlation grid");
    add_common(heatmap, common_heatmap);
    add_process(heatmap, proc_heatmap);
    add_net(heatmap, net_a, "-a");
    add_net(heatmap, net_b, "-b");

    auto *sweep = app.add_subcommand(
        "sweep", "simulate once per hyperparameter variant");
    add_common(sweep, common_sweep);
    std::string sweep_axes_text;
    sweep->add_option("--axes", sweep_axes_text,
                      "JSON object of axis values, e.g. "
                      "'{\"hidden_units\":[64,128]}'");

    auto *report = app.add_subcommand(
        "report", "re-render charts from an existing summary JSON");
    std::string report_from, report_out;
    report->add_option("--from", report_from, "run/aggregate JSON path")
        ->required();
    report->add_option("--out", report_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            json doc = load_base_config(common_generate);
            fold_process(doc, proc_generate);
            fold_common(doc, common_generate);
            return dispatch(rd_cmd_generate, doc, common_generate.quiet);
        }
        if (run->parsed()) {
            json doc = load_base_config(common_run);
            fold_process(doc, proc_run);
            fold_net(doc, net_run);
            fold_run(doc, run_run);
            fold_common(doc, common_run);
            return dispatch(rd_cmd_run, doc, common_run.quiet);
        }
        if (simulate->parsed()) {
            json doc = load_base_config(common_simulate);
            fold_process(doc, proc_simulate);
            fold_net(doc, net_simulate);
            fold_run(doc, run_simulate);
            fold_common(doc, common_simulate);
            return dispatch(rd_cmd_simulate, doc, common_simulate.quiet);
        }
        if (heatmap->parsed()) {
            json doc = load_base_config(common_heatmap);
            fold_process(doc, proc_heatmap);
            fold_net(doc, net_a, "rnn_a");
            fold_net(doc, net_b, "rnn_b");
            fold_common(doc, common_heatmap);
            return dispatch(rd_cmd_heatmap, doc, common_heatmap.quiet);
        }
        if (sweep->parsed()) {
            json doc = load_base_config(common_sweep);
            if (!sweep_axes_text.empty()) {
                json axes = json::parse(sweep_axes_text, nullptr, false);
                if (axes.is_discarded()) {
                    std::cerr << "error: --axes is not valid JSON\n";
                    return 2;
                }
                doc["sweep"] = axes;
            }
            fold_common(doc, common_sweep);
            return dispatch(rd_cmd_sweep, doc, common_sweep.quiet);
        }
        if (report->parsed()) {
            char *result = nullptr;
            const rd_status status = rd_cmd_report(
                report_from.c_str(), report_out.c_str(), &result);
            if (status != RD_OK) {
                std::cerr << "error: " << rd_last_error() << "\n";
                return exit_code_for(status);
            }
            if (result) {
                std::cout << result << "\n";
                rd_string_free(result);
            }
            return 0;
        }
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
