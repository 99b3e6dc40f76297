#ifndef AFRELAY_RNG_HPP
#define AFRELAY_RNG_HPP

#include <cstdint>

namespace afrelay {

// Counter-based random stream: each (seed, trial) pair opens an independent,
// fully deterministic draw sequence, so trial results do not depend on how
// trials are partitioned across workers.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();

    // Uniform on (0, 1).
    double uniform();

    // Standard normal (Box-Muller, one spare cached per stream).
    double normal();

    // Gamma variate, shape > 0, scale > 0 (Marsaglia-Tsang).
    double gamma_variate(double shape, double scale);

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace afrelay

#endif
