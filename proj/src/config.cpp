#include "rnndcor/config.hpp"

#include <cstdlib>

#include "rnndcor/errors.hpp"

namespace rnndcor::exp {

namespace {

ProcessType process_type_from(const std::string &name) {
    if (name == "ar") return ProcessType::Ar;
    if (name == "ma") return ProcessType::Ma;
    if (name == "arma") return ProcessType::Arma;
    if (name == "garch") return ProcessType::Garch;
    if (name == "csv") return ProcessType::Csv;
    throw ConfigError("unknown process type '" + name + "'");
}

tsgen::MaForm ma_form_from(const std::string &name) {
    if (name == "printed") return tsgen::MaForm::Printed;
    if (name == "standard") return tsgen::MaForm::Standard;
    throw ConfigError("unknown MA form '" + name + "' (printed|standard)");
}

tsgen::GarchForm garch_form_from(const std::string &name) {
    if (name == "printed") return tsgen::GarchForm::Printed;
    if (name == "standard") return tsgen::GarchForm::Standard;
    throw ConfigError("unknown GARCH form '" + name + "' (printed|standard)");
}

} // namespace

const char *process_type_name(ProcessType t) {
    switch (t) {
    case ProcessType::Ar: return "ar";
    case ProcessType::Ma: return "ma";
    case ProcessType::Arma: return "arma";
    case ProcessType::Garch: return "garch";
    case ProcessType::Csv: return "csv";
    }
    return "unknown";
}

std::vector<double> default_ar_coeffs(std::size_t p) {
    if (p == 0) throw ConfigError("AR order must be >= 1");
    std::vector<double> coeffs(p, 0.0);
    coeffs[p - 1] = 0.99;
    return coeffs;
}

std::vector<double> default_ma_coeffs(std::size_t q) {
    if (q == 0) throw ConfigError("MA order must be >= 1");
    std::vector<double> coeffs(q, 0.0);
    coeffs[q - 1] = 0.8;
    return coeffs;
}

void default_garch_params(std::size_t p, std::size_t q,
                          std::vector<double> &alpha,
                          std::vector<double> &beta) {
    if (p == 0 || q == 0) throw ConfigError("GARCH orders must be >= 1");
    alpha.assign(p, 0.4 / static_cast<double>(p));
    beta.assign(q, 0.4 / static_cast<double>(q));
}

void ProcessSpec::resolve_defaults() {
    switch (type) {
    case ProcessType::Ar:
        if (ar_coeffs.empty()) ar_coeffs = default_ar_coeffs(ar_order);
        ar_order = ar_coeffs.size();
        break;
    case ProcessType::Ma:
        if (ma_coeffs.empty()) ma_coeffs = default_ma_coeffs(ma_order);
        ma_order = ma_coeffs.size();
        break;
    case ProcessType::Arma:
        if (ar_coeffs.empty()) ar_coeffs = default_ar_coeffs(ar_order);
        if (ma_coeffs.empty()) ma_coeffs = default_ma_coeffs(ma_order);
        ar_order = ar_coeffs.size();
        ma_order = ma_coeffs.size();
        break;
    case ProcessType::Garch:
        if (alpha.empty() && beta.empty()) {
            default_garch_params(garch_p, garch_q, alpha, beta);
        } else if (alpha.empty() || beta.empty()) {
            throw ConfigError(
                "give both GARCH coefficient vectors or neither");
        }
        garch_p = alpha.size();
        garch_q = beta.size();
        break;
    case ProcessType::Csv:
        if (csv_path.empty()) {
            throw ConfigError("csv process needs process.csv_path");
        }
        break;
    }
}

std::string ProcessSpec::display_name() const {
    switch (type) {
    case ProcessType::Ar:
        return "AR(" + std::to_string(ar_coeffs.size()) + ")";
    case ProcessType::Ma:
        return "MA(" + std::to_string(ma_coeffs.size()) + ")";
    case ProcessType::Arma:
        return "ARMA(" + std::to_string(ar_coeffs.size()) + "," +
               std::to_string(ma_coeffs.size()) + ")";
    case ProcessType::Garch:
        return "GARCH(" + std::to_string(alpha.size()) + "," +
               std::to_string(beta.size()) + ")";
    case ProcessType::Csv:
        return "CSV(" + csv_path + ")";
    }
    return "?";
}

tsgen::TimeSeries ProcessSpec::generate(std::uint64_t seed) const {
    tsgen::NoiseSpec noise_used = noise;
    noise_used.seed = seed;
    switch (type) {
    case ProcessType::Ar:
        return tsgen::gen_ar({ar_coeffs}, noise_used, length, burn_in);
    case ProcessType::Ma:
        return tsgen::gen_ma({ma_coeffs, delta, ma_form}, noise_used, length,
                             burn_in);
    case ProcessType::Arma:
        return tsgen::gen_arma({ar_coeffs}, {ma_coeffs, delta, ma_form},
                               noise_used, length, burn_in);
    case ProcessType::Garch: {
        tsgen::GarchParams params;
        params.alpha0 = alpha0;
        params.alpha = alpha;
        params.beta = beta;
        params.form = garch_form;
        return tsgen::gen_garch(params, noise_used, length, burn_in);
    }
    case ProcessType::Csv: {
        tsgen::CsvOptions opts;
        opts.column = csv_column;
        opts.delimiter = csv_delimiter.empty() ? ',' : csv_delimiter[0];
        opts.has_header = csv_has_header;
        opts.row_begin = csv_row_begin;
        opts.row_end = csv_row_end;
        return tsgen::load_csv(csv_path, opts);
    }
    }
    throw InternalError("unhandled process type");
}

void to_json(nlohmann::json &j, const ProcessSpec &p) {
    j = {{"type", process_type_name(p.type)},
         {"noise", {{"mean", p.noise.mean}, {"std", p.noise.std}}},
         {"length", p.length},
         {"burn_in", p.burn_in}};
    switch (p.type) {
    case ProcessType::Ar:
        j["ar_coeffs"] = p.ar_coeffs;
        break;
    case ProcessType::Ma:
        j["ma_coeffs"] = p.ma_coeffs;
        j["delta"] = p.delta;
        j["ma_form"] = p.ma_form == tsgen::MaForm::Printed ? "printed"
                                                           : "standard";
        break;
    case ProcessType::Arma:
        j["ar_coeffs"] = p.ar_coeffs;
        j["ma_coeffs"] = p.ma_coeffs;
        j["delta"] = p.delta;
        j["ma_form"] = p.ma_form == tsgen::MaForm::Printed ? "printed"
                                                           : "standard";
        break;
    case ProcessType::Garch:
        j["alpha0"] = p.alpha0;
        j["alpha"] = p.alpha;
        j["beta"] = p.beta;
        j["garch_form"] = p.garch_form == tsgen::GarchForm::Printed
                              ? "printed"
                              : "standard";
        break;
    case ProcessType::Csv:
        j["csv_path"] = p.csv_path;
        j["csv_column"] = p.csv_column;
        j["csv_delimiter"] = p.csv_delimiter;
        j["csv_has_header"] = p.csv_has_header;
        j["csv_row_begin"] = p.csv_row_begin;
        j["csv_row_end"] = p.csv_row_end;
        break;
    }
}

void from_json(const nlohmann::json &j, ProcessSpec &p) {
    p = ProcessSpec{};
    p.type = process_type_from(j.value("type", std::string("ar")));

    // `coeffs` is accepted as the natural spelling for the single-family
    // processes.
    if (j.contains("coeffs")) {
        if (p.type == ProcessType::Ma) {
            p.ma_coeffs = j.at("coeffs").get<std::vector<double>>();
        } else {
            p.ar_coeffs = j.at("coeffs").get<std::vector<double>>();
        }
    }
    if (j.contains("ar_coeffs"))
        p.ar_coeffs = j.at("ar_coeffs").get<std::vector<double>>();
    if (j.contains("ma_coeffs"))
        p.ma_coeffs = j.at("ma_coeffs").get<std::vector<double>>();
    p.ar_order = j.value("ar_order", j.value("order", p.ar_order));
    p.ma_order = j.value("ma_order", j.value("order", p.ma_order));
    p.delta = j.value("delta", p.delta);
    p.ma_form = ma_form_from(j.value("ma_form", std::string("standard")));

    p.alpha0 = j.value("alpha0", p.alpha0);
    if (j.contains("alpha"))
        p.alpha = j.at("alpha").get<std::vector<double>>();
    if (j.contains("beta")) p.beta = j.at("beta").get<std::vector<double>>();
    p.garch_p = j.value("garch_p", j.value("order", p.garch_p));
    p.garch_q = j.value("garch_q", j.value("order", p.garch_q));
    p.garch_form =
        garch_form_from(j.value("garch_form", std::string("standard")));

    if (j.contains("noise")) {
        const auto &n = j.at("noise");
        p.noise.mean = n.value("mean", 0.0);
        p.noise.std = n.value("std", 1.0);
        p.noise.seed = n.value("seed", std::uint64_t{0});
    }
    p.length = j.value("length", j.value("len", p.length));
    p.burn_in = j.value("burn_in", p.burn_in);

    p.csv_path = j.value("csv_path", p.csv_path);
    p.csv_column = j.value("csv_column", p.csv_column);
    p.csv_delimiter = j.value("csv_delimiter", p.csv_delimiter);
    p.csv_has_header = j.value("csv_has_header", p.csv_has_header);
    p.csv_row_begin = j.value("csv_row_begin", p.csv_row_begin);
    p.csv_row_end = j.value("csv_row_end", p.csv_row_end);

    p.resolve_defaults();
}

void ExperimentConfig::validate() const {
    if (runs == 0) throw ConfigError("run count must be >= 1");
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        throw ConfigError("split ratio must lie in (0, 1)");
    }
    if (profile_on != "test" && profile_on != "train") {
        throw ConfigError("profile_on must be 'test' or 'train'");
    }
    net.validate();
}

void to_json(nlohmann::json &j, const ExperimentConfig &c) {
    j = {{"process", c.process},
         {"split_ratio", c.split_ratio},
         {"standardize_on", c.standardize_on_full ? "full" : "train"},
         {"profile_on", c.profile_on},
         {"rnn", c.net},
         {"runs", c.runs},
         {"seed", c.base_seed},
         {"output_dir", c.output_dir},
         {"subsample_cap", c.subsample_cap},
         {"report_precision", c.report_precision},
         {"threads", c.threads}};
}

void from_json(const nlohmann::json &j, ExperimentConfig &c) {
    c = ExperimentConfig{};
    if (j.contains("process")) c.process = j.at("process").get<ProcessSpec>();
    else c.process.resolve_defaults();
    c.split_ratio = j.value("split_ratio", c.split_ratio);
    const std::string standardize_on =
        j.value("standardize_on", std::string("train"));
    if (standardize_on == "full") {
        c.standardize_on_full = true;
    } else if (standardize_on == "train") {
        c.standardize_on_full = false;
    } else {
        throw ConfigError("standardize_on must be 'train' or 'full'");
    }
    c.profile_on = j.value("profile_on", c.profile_on);
    if (j.contains("rnn")) c.net = j.at("rnn").get<rnn::RnnConfig>();
    c.runs = j.value("runs", c.runs);
    c.base_seed = j.value("seed", c.base_seed);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.subsample_cap = j.value("subsample_cap", c.subsample_cap);
    c.report_precision = j.value("report_precision", c.report_precision);
    c.threads = j.value("threads", c.threads);
    c.validate();
}

void to_json(nlohmann::json &j, const HeatmapConfig &c) {
    j = {{"process", c.process},
         {"split_ratio", c.split_ratio},
         {"standardize_on", c.standardize_on_full ? "full" : "train"},
         {"rnn_a", c.net_a},
         {"rnn_b", c.net_b},
         {"seed", c.base_seed},
         {"output_dir", c.output_dir},
         {"subsample_cap", c.subsample_cap}};
}

void from_json(const nlohmann::json &j, HeatmapConfig &c) {
    c = HeatmapConfig{};
    if (j.contains("process")) c.process = j.at("process").get<ProcessSpec>();
    else c.process.resolve_defaults();
    c.split_ratio = j.value("split_ratio", c.split_ratio);
    c.standardize_on_full =
        j.value("standardize_on", std::string("train")) == "full";
    if (j.contains("rnn_a")) c.net_a = j.at("rnn_a").get<rnn::RnnConfig>();
    if (j.contains("rnn_b")) c.net_b = j.at("rnn_b").get<rnn::RnnConfig>();
    c.net_a_seed_set = j.contains("rnn_a") && j.at("rnn_a").contains("seed");
    c.net_b_seed_set = j.contains("rnn_b") && j.at("rnn_b").contains("seed");
    c.base_seed = j.value("seed", c.base_seed);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.subsample_cap = j.value("subsample_cap", c.subsample_cap);
}

void to_json(nlohmann::json &j, const SweepConfig &c) {
    j = nlohmann::json::object();
    to_json(j, c.base);
    nlohmann::json axes = nlohmann::json::object();
    for (const auto &[axis, values] : c.axes) axes[axis] = values;
    j["sweep"] = axes;
}

void from_json(const nlohmann::json &j, SweepConfig &c) {
    c = SweepConfig{};
    c.base = j.get<ExperimentConfig>();
    if (!j.contains("sweep")) return;
    static const std::vector<std::string> valid = {
        "hidden_units", "learning_rate", "dropout_final",
        "window",       "activation",    "epochs"};
    for (const auto &[axis, values] : j.at("sweep").items()) {
        if (std::find(valid.begin(), valid.end(), axis) == valid.end()) {
            throw ConfigError("unknown sweep axis '" + axis + "'");
        }
        if (!values.is_array() || values.empty()) {
            throw ConfigError("sweep axis '" + axis +
                              "' needs a nonempty array");
        }
        c.axes[axis] =
            std::vector<nlohmann::json>(values.begin(), values.end());
    }
}

void apply_override(nlohmann::json &doc, const std::string &path,
                    const std::string &value) {
    nlohmann::json parsed;
    if (value.find(':') != std::string::npos &&
        value.find_first_not_of("0123456789.:+-eE") == std::string::npos) {
        // colon list -> numeric array
        parsed = nlohmann::json::array();
        std::size_t start = 0;
        while (start <= value.size()) {
            const std::size_t stop = value.find(':', start);
            const std::string item =
                value.substr(start, stop == std::string::npos
                                        ? std::string::npos
                                        : stop - start);
            try {
                parsed.push_back(std::stod(item));
            } catch (const std::exception &) {
                throw ConfigError("cannot parse '" + item +
                                  "' in list override '" + value + "'");
            }
            if (stop == std::string::npos) break;
            start = stop + 1;
        }
    } else {
        parsed = nlohmann::json::parse(value, nullptr, false);
        if (parsed.is_discarded()) parsed = value; // plain string
    }

    nlohmann::json *node = &doc;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = path.find('.', start);
        const std::string key =
            path.substr(start, dot == std::string::npos ? std::string::npos
                                                        : dot - start);
        if (key.empty()) throw ConfigError("bad override path '" + path + "'");
        if (dot == std::string::npos) {
            (*node)[key] = parsed;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

nlohmann::json parse_json_text(const std::string &text,
                               const std::string &what) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ConfigError("invalid JSON in " + what);
    }
    return doc;
}

std::string default_output_dir() {
    const char *env = std::getenv("RNNDCOR_OUT");
    return env && *env ? env : ".";
}

} // namespace rnndcor::exp
