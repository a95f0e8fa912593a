#ifndef RNNDCOR_TSGEN_HPP
#define RNNDCOR_TSGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace rnndcor::tsgen {

/// White-noise specification: N(mean, std^2) with a fixed seed.
struct NoiseSpec {
    double mean = 0.0;
    double std = 1.0;
    std::uint64_t seed = 0;
};

/// The MA and GARCH recursions exist in two conventions; both are
/// implemented and the caller picks. Printed omits the contemporaneous
/// noise term (MA) and squares the lagged variance (GARCH); Standard is
/// the textbook definition.
///
/// MA:    printed  z_l = delta + sum_i theta_i e_{l-i}
///        standard z_l = delta + e_l + sum_i theta_i e_{l-i}
/// GARCH: printed  h_l = a0 + sum alpha_i z^2_{l-i} + sum beta_j h^2_{l-j}
///        standard h_l = a0 + sum alpha_i z^2_{l-i} + sum beta_j h_{l-j}
enum class MaForm { Printed, Standard };
enum class GarchForm { Printed, Standard };

struct ArParams {
    std::vector<double> coeffs; // c_1..c_p, zero entries allowed
};

struct MaParams {
    std::vector<double> coeffs; // theta_1..theta_q; empty is treated as {0}
    double delta = 0.0;
    MaForm form = MaForm::Printed;
};

struct GarchParams {
    double alpha0 = 0.0;
    std::vector<double> alpha; // ARCH coefficients, each >= 0
    std::vector<double> beta;  // GARCH coefficients, each >= 0
    GarchForm form = GarchForm::Printed;
};

enum class SeriesOrigin { Ar, Ma, Arma, Garch, Csv };

const char *origin_name(SeriesOrigin origin);

struct TimeSeries {
    std::vector<double> values;
    SeriesOrigin origin = SeriesOrigin::Csv;
    std::uint64_t seed = 0;
    nlohmann::json params; // full parameter record for provenance sidecars

    std::size_t length() const noexcept { return values.size(); }
};

/// True when the AR characteristic polynomial 1 - c_1 x - ... - c_p x^p
/// has all roots strictly outside the unit circle (Schur-Cohn step-down
/// on the reversed polynomial).
bool is_stationary(const std::vector<double> &coeffs);

/// z_l = sum_i c_i z_{l-i} + e_l, pre-history zero, first burn_in values
/// discarded.
TimeSeries gen_ar(const ArParams &params, const NoiseSpec &noise,
                  std::size_t length, std::size_t burn_in);

TimeSeries gen_ma(const MaParams &params, const NoiseSpec &noise,
                  std::size_t length, std::size_t burn_in);

/// AR and MA parts combined over one shared noise stream. The MA side
/// (including the presence of the contemporaneous noise term) follows
/// ma.form, so zeroing the AR coefficients reproduces gen_ma bit-exactly
/// in either form; zeroing the MA side reproduces gen_ar in Standard
/// form (the Printed form has no noise term left to drive the recursion).
TimeSeries gen_arma(const ArParams &ar, const MaParams &ma,
                    const NoiseSpec &noise, std::size_t length,
                    std::size_t burn_in);

/// z_l = sqrt(h_l) e_l with the variance recursion picked by params.form.
/// h pre-history is alpha0, z pre-history zero. The recursion aborts with
/// NumericalInstabilityError if any h_l is non-finite or exceeds 1e12.
/// When variance_out is non-null the retained h_l values are copied there.
TimeSeries gen_garch(const GarchParams &params, const NoiseSpec &noise,
                     std::size_t length, std::size_t burn_in,
                     std::vector<double> *variance_out = nullptr);

struct CsvOptions {
    std::size_t column = 0;
    char delimiter = ',';
    bool has_header = false;
    // Optional row window (applied after the header), half-open, 0 = all.
    std::size_t row_begin = 0;
    std::size_t row_end = 0;
};

TimeSeries load_csv(const std::string &path, const CsvOptions &options = {});

/// Single-column series export, optionally with a `value` header row.
void save_csv(const TimeSeries &series, const std::string &path,
              bool with_header = true);

} // namespace rnndcor::tsgen

#endif
