#include "afrelay/rng.hpp"

#include <cmath>

namespace afrelay {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
{
    state_ = mix64(seed + kGolden) ^ mix64(trial * kGolden + 0x1234567895D3C0A9ULL);
    next_u64();
}

std::uint64_t TrialRng::next_u64()
{
    state_ += kGolden;
    return mix64(state_);
}

double TrialRng::uniform()
{
    // 53-bit mantissa in (0, 1); never returns 0 so log(u) is safe.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double TrialRng::normal()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

double TrialRng::gamma_variate(double shape, double scale)
{
    if (shape < 1.0) {
        // Boost to shape + 1 and scale back by U^{1/shape}.
        const double u = uniform();
        return gamma_variate(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return scale * d * v;
    }
}

} // namespace afrelay
