#include "rnndcor/tsgen.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"
#include "rnndcor/rng.hpp"

namespace rnndcor::tsgen {

namespace {

constexpr double kVarianceCeiling = 1e12;

void check_noise(const NoiseSpec &noise) {
    if (!(noise.std > 0.0) || !std::isfinite(noise.std) ||
        !std::isfinite(noise.mean)) {
        throw ConfigError("noise requires finite mean and std > 0");
    }
}

void check_length(std::size_t length) {
    if (length < 2) {
        throw InvalidLengthError("series length must be >= 2, got " +
                                 std::to_string(length));
    }
}

std::vector<double> draw_noise(const NoiseSpec &noise, std::size_t count) {
    Rng rng(noise.seed);
    std::vector<double> eps(count);
    for (double &e : eps) e = rng.next_normal(noise.mean, noise.std);
    return eps;
}

double ar_part(const std::vector<double> &z, std::size_t l,
               const std::vector<double> &coeffs) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= coeffs.size(); ++i) {
        if (l >= i) acc += coeffs[i - 1] * z[l - i];
    }
    return acc;
}

// delta + (e_l for the standard form) + lagged noise terms, accumulated in
// a fixed order shared by gen_ma and gen_arma so the reduction laws hold
// bit-exactly.
double ma_part(const std::vector<double> &eps, std::size_t l,
               const std::vector<double> &coeffs, double delta, MaForm form) {
    double acc = delta;
    if (form == MaForm::Standard) acc += eps[l];
    for (std::size_t i = 1; i <= coeffs.size(); ++i) {
        if (l >= i) acc += coeffs[i - 1] * eps[l - i];
    }
    return acc;
}

nlohmann::json noise_json(const NoiseSpec &noise) {
    return {{"mean", noise.mean}, {"std", noise.std}, {"seed", noise.seed}};
}

const char *ma_form_name(MaForm form) {
    return form == MaForm::Printed ? "printed" : "standard";
}

const char *garch_form_name(GarchForm form) {
    return form == GarchForm::Printed ? "printed" : "standard";
}

} // namespace

const char *origin_name(SeriesOrigin origin) {
    switch (origin) {
    case SeriesOrigin::Ar: return "ar";
    case SeriesOrigin::Ma: return "ma";
    case SeriesOrigin::Arma: return "arma";
    case SeriesOrigin::Garch: return "garch";
    case SeriesOrigin::Csv: return "csv";
    }
    return "unknown";
}

bool is_stationary(const std::vector<double> &coeffs) {
    for (double c : coeffs) {
        if (!std::isfinite(c)) return false;
    }
    // Reversed polynomial z^p + d_1 z^{p-1} + ... + d_p with d_i = -c_i;
    // the process is stationary iff all of its roots lie strictly inside
    // the unit circle. Schur-Cohn step-down: peel reflection coefficients
    // k_n = d_n; stability iff every |k_n| < 1.
    std::vector<double> d(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = -coeffs[i];
    for (std::size_t n = d.size(); n >= 1; --n) {
        const double k = d[n - 1];
        if (!(std::abs(k) < 1.0)) return false;
        if (n == 1) break;
        const double denom = 1.0 - k * k;
        std::vector<double> next(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            next[i] = (d[i] - k * d[n - 2 - i]) / denom;
        }
        d = std::move(next);
    }
    return true;
}

TimeSeries gen_ar(const ArParams &params, const NoiseSpec &noise,
                  std::size_t length, std::size_t burn_in) {
    check_noise(noise);
    check_length(length);
    if (!is_stationary(params.coeffs)) {
        throw StationarityError(
            "AR coefficients violate stationarity (characteristic roots "
            "not strictly outside the unit circle)");
    }
    const std::size_t total = burn_in + length;
    const std::vector<double> eps = draw_noise(noise, total);
    std::vector<double> z(total);
    for (std::size_t l = 0; l < total; ++l) {
        z[l] = ar_part(z, l, params.coeffs) + eps[l];
    }

    TimeSeries out;
    out.values.assign(z.begin() + static_cast<std::ptrdiff_t>(burn_in),
                      z.end());
    out.origin = SeriesOrigin::Ar;
    out.seed = noise.seed;
    out.params = {{"process", "ar"},
                  {"coeffs", params.coeffs},
                  {"noise", noise_json(noise)},
                  {"length", length},
                  {"burn_in", burn_in}};
    return out;
}

TimeSeries gen_ma(const MaParams &params, const NoiseSpec &noise,
                  std::size_t length, std::size_t burn_in) {
    check_noise(noise);
    check_length(length);
    std::vector<double> coeffs =
        params.coeffs.empty() ? std::vector<double>{0.0} : params.coeffs;
    const std::size_t total = burn_in + length;
    const std::vector<double> eps = draw_noise(noise, total);
    std::vector<double> z(total);
    for (std::size_t l = 0; l < total; ++l) {
        z[l] = ma_part(eps, l, coeffs, params.delta, params.form);
    }

    TimeSeries out;
    out.values.assign(z.begin() + static_cast<std::ptrdiff_t>(burn_in),
                      z.end());
    out.origin = SeriesOrigin::Ma;
    out.seed = noise.seed;
    out.params = {{"process", "ma"},
                  {"coeffs", coeffs},
                  {"delta", params.delta},
                  {"form", ma_form_name(params.form)},
                  {"noise", noise_json(noise)},
                  {"length", length},
                  {"burn_in", burn_in}};
    return out;
}

TimeSeries gen_arma(const ArParams &ar, const MaParams &ma,
                    const NoiseSpec &noise, std::size_t length,
                    std::size_t burn_in) {
    check_noise(noise);
    check_length(length);
    if (!is_stationary(ar.coeffs)) {
        throw StationarityError(
            "AR coefficients violate stationarity (characteristic roots "
            "not strictly outside the unit circle)");
    }
    std::vector<double> theta =
        ma.coeffs.empty() ? std::vector<double>{0.0} : ma.coeffs;
    const std::size_t total = burn_in + length;
    const std::vector<double> eps = draw_noise(noise, total);
    std::vector<double> z(total);
    for (std::size_t l = 0; l < total; ++l) {
        z[l] = ar_part(z, l, ar.coeffs) +
               ma_part(eps, l, theta, ma.delta, ma.form);
    }

    TimeSeries out;
    out.values.assign(z.begin() + static_cast<std::ptrdiff_t>(burn_in),
                      z.end());
    out.origin = SeriesOrigin::Arma;
    out.seed = noise.seed;
    out.params = {{"process", "arma"},
                  {"ar_coeffs", ar.coeffs},
                  {"ma_coeffs", theta},
                  {"delta", ma.delta},
                  {"form", ma_form_name(ma.form)},
                  {"noise", noise_json(noise)},
                  {"length", length},
                  {"burn_in", burn_in}};
    return out;
}

TimeSeries gen_garch(const GarchParams &params, const NoiseSpec &noise,
                     std::size_t length, std::size_t burn_in,
                     std::vector<double> *variance_out) {
    check_noise(noise);
    check_length(length);
    if (!(params.alpha0 > 0.0) || !std::isfinite(params.alpha0)) {
        throw GarchConstraintError("alpha0 must be finite and > 0");
    }
    double coeff_sum = 0.0;
    for (double a : params.alpha) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw GarchConstraintError("alpha coefficients must be >= 0");
        }
        coeff_sum += a;
    }
    for (double b : params.beta) {
        if (!(b >= 0.0) || !std::isfinite(b)) {
            throw GarchConstraintError("beta coefficients must be >= 0");
        }
        coeff_sum += b;
    }
    if (!(coeff_sum < 1.0)) {
        throw GarchConstraintError(
            "sum of alpha and beta coefficients must be < 1 for a finite "
            "unconditional variance, got " + std::to_string(coeff_sum));
    }

    const std::size_t total = burn_in + length;
    const std::vector<double> eps = draw_noise(noise, total);
    std::vector<double> z(total);
    std::vector<double> h(total);
    const bool squared_h = params.form == GarchForm::Printed;
    for (std::size_t l = 0; l < total; ++l) {
        double v = params.alpha0;
        for (std::size_t i = 1; i <= params.alpha.size(); ++i) {
            const double zl = l >= i ? z[l - i] : 0.0; // zero pre-history
            v += params.alpha[i - 1] * zl * zl;
        }
        for (std::size_t j = 1; j <= params.beta.size(); ++j) {
            const double hl = l >= j ? h[l - j] : params.alpha0;
            v += params.beta[j - 1] * (squared_h ? hl * hl : hl);
        }
        if (!std::isfinite(v) || v > kVarianceCeiling) {
            throw NumericalInstabilityError(
                "GARCH variance recursion left the stable range at step " +
                std::to_string(l));
        }
        h[l] = v;
        z[l] = std::sqrt(v) * eps[l];
    }

    TimeSeries out;
    out.values.assign(z.begin() + static_cast<std::ptrdiff_t>(burn_in),
                      z.end());
    if (variance_out) {
        variance_out->assign(h.begin() + static_cast<std::ptrdiff_t>(burn_in),
                             h.end());
    }
    out.origin = SeriesOrigin::Garch;
    out.seed = noise.seed;
    out.params = {{"process", "garch"},
                  {"alpha0", params.alpha0},
                  {"alpha", params.alpha},
                  {"beta", params.beta},
                  {"form", garch_form_name(params.form)},
                  {"noise", noise_json(noise)},
                  {"length", length},
                  {"burn_in", burn_in}};
    return out;
}

TimeSeries load_csv(const std::string &path, const CsvOptions &options) {
    const auto rows = csvio::read_rows(path, options.delimiter);

    std::size_t first = options.has_header ? 1 : 0;
    std::size_t begin = first + options.row_begin;
    std::size_t end = options.row_end > 0
                          ? std::min(first + options.row_end, rows.size())
                          : rows.size();

    std::vector<double> values;
    for (std::size_t r = begin; r < end && r < rows.size(); ++r) {
        const auto &row = rows[r];
        if (row.size() == 1 && row[0].empty()) continue; // blank line
        if (options.column >= row.size()) {
            throw ParseError("row " + std::to_string(r + 1) + ": column " +
                             std::to_string(options.column) +
                             " is out of range");
        }
        const std::string &cell = row[options.column];
        const char *text = cell.c_str();
        char *parse_end = nullptr;
        double v = std::strtod(text, &parse_end);
        while (parse_end && *parse_end == ' ') ++parse_end;
        if (parse_end == text || (parse_end && *parse_end != '\0') ||
            !std::isfinite(v)) {
            throw ParseError("row " + std::to_string(r + 1) +
                             ": cannot parse '" + cell + "' as a number");
        }
        values.push_back(v);
    }
    if (values.size() < 2) {
        throw InsufficientDataError(
            "CSV yielded fewer than 2 usable rows (" +
            std::to_string(values.size()) + ")");
    }

    TimeSeries out;
    out.origin = SeriesOrigin::Csv;
    out.seed = 0;
    out.params = {{"process", "csv"},
                  {"path", path},
                  {"column", options.column},
                  {"has_header", options.has_header},
                  {"rows", values.size()}};
    out.values = std::move(values);
    return out;
}

void save_csv(const TimeSeries &series, const std::string &path,
              bool with_header) {
    std::ostringstream text;
    if (with_header) text << "value\n";
    for (double v : series.values) text << csvio::format_double(v) << "\n";
    csvio::write_text_file(path, text.str());
}

} // namespace rnndcor::tsgen
