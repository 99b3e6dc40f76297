#ifndef AFRELAY_MONTECARLO_HPP
#define AFRELAY_MONTECARLO_HPP

#include "afrelay/estimate.hpp"
#include "afrelay/link.hpp"

#include <cstdint>

namespace afrelay {

// Empirical outage probability from direct simulation of the end-to-end
// SNR.  Each trial draws from its own counter-based stream, so the result
// is bit-identical for any worker count (workers = 0 picks the hardware
// concurrency).
OutageEstimate estimate_outage(const LinkSpec& link, double gamma_bar,
                               std::int64_t trials, std::uint64_t seed,
                               int workers = 0);

// Per-trial comparison of the direct SNR threshold test against the
// algebraically identical recursive form ((X_1 - s_1)X_2 - s_2)...X_N < s_N
// with s_n = rho_n * gamma_th / gamma_bar.
struct RecursionReport {
    std::int64_t trials = 0;
    std::int64_t disagreements = 0;
};

RecursionReport recursion_consistency_check(const LinkSpec& link,
                                            double gamma_bar,
                                            std::int64_t trials,
                                            std::uint64_t seed);

} // namespace afrelay

#endif
