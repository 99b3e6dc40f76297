#ifndef AFRELAY_LINK_HPP
#define AFRELAY_LINK_HPP

#include "afrelay/fading.hpp"

#include <span>
#include <variant>
#include <vector>

namespace afrelay {

struct HopSpec {
    FadingModel fading;
    double rho; // noise scaling, > 0; rho of hop 1 is pinned to 1
};

// A_n = 1 / sqrt(E[|h_n|^2] + rho_n / gamma_bar)
struct PaperGain {};
// gamma_bar -> infinity limit: A_n = 1 / sqrt(E[|h_n|^2])
struct AsymptoticGain {};
struct FixedGains {
    std::vector<double> gains; // length N - 1
};

using AmplificationPolicy = std::variant<PaperGain, AsymptoticGain, FixedGains>;

struct LinkSpec {
    std::vector<HopSpec> hops; // length N >= 2
    double gamma_th = 1.0;     // outage SNR threshold, linear
    AmplificationPolicy amplification = PaperGain{};

    std::size_t n_hops() const { return hops.size(); }
    double rho_last() const { return hops.back().rho; }
};

// Throws config_error on violated invariants (N < 2, rho_1 != 1, ...).
void validate(const LinkSpec& link);

// Relay gains A_1..A_{N-1} under the link's amplification policy.
std::vector<double> amplification_gains(const LinkSpec& link, double gamma_bar);

// Instantaneous end-to-end SNR for realized channel powers |h_n|^2.
double end_to_end_snr(const LinkSpec& link, double gamma_bar,
                      std::span<const double> powers);

// Per-hop average SNR (E[|h_n|^2] / rho_n) * gamma_bar.
std::vector<double> per_hop_avg_snr(const LinkSpec& link, double gamma_bar);

// Hop power distributions with the squared gains absorbed into the scale:
// X_n = A_{n-1}^2 |h_n|^2 (A_0 = 1).
std::vector<FadingModel> effective_models(const LinkSpec& link,
                                          std::span<const double> gains);

// Gains for the analytic expansions: the link's policy with PaperGain
// replaced by its gamma_bar-independent asymptotic limit, so that series
// coefficients stay constant across the sweep.
std::vector<double> asymptotic_gains(const LinkSpec& link);

} // namespace afrelay

#endif
