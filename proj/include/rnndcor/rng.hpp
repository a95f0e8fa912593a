#ifndef RNNDCOR_RNG_HPP
#define RNNDCOR_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace rnndcor {

/// Deterministic random source used everywhere randomness is needed.
///
/// Uniforms come from MT19937-64 (fully specified by the C++ standard, so
/// identical on every conforming platform). Normal variates use the
/// Box-Muller transform on those uniforms; standard-library distributions
/// are avoided because their algorithms are implementation-defined.
/// Every draw consumes a documented number of engine outputs, so streams
/// are reproducible from the seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution. One engine output.
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Draws two uniforms per pair and
    /// caches the second variate.
    double next_normal();

    double next_normal(double mean, double std) {
        return mean + std * next_normal();
    }

    /// Unbiased integer in [0, bound) by rejection. bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Fisher-Yates shuffle (descending index, next_below for the pick).
    template <typename T> void shuffle(std::vector<T> &v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stable derivation of per-purpose sub-seeds (splitmix64 of base ^ tag).
/// Keeps independent random streams (series, weights, shuffling, dropout)
/// from aliasing while staying reproducible from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

} // namespace rnndcor

#endif
