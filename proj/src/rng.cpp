#include "rnndcor/rng.hpp"

#include <cmath>
#include <numbers>

namespace rnndcor {

double Rng::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 is mapped to (0, 1] so log never sees zero.
    double u1 = 1.0 - next_uniform();
    double u2 = next_uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // Reject draws from the final partial block to avoid modulo bias.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value.
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace rnndcor
