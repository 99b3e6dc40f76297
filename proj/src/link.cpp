#include "afrelay/link.hpp"
#include "afrelay/errors.hpp"

#include <cmath>

namespace afrelay {

void validate(const LinkSpec& link)
{
    if (link.n_hops() < 2)
        throw config_error("link: at least two hops required");
    if (link.hops.front().rho != 1.0)
        throw config_error("link: rho of hop 1 must equal 1");
    for (const HopSpec& hop : link.hops) {
        if (!(hop.rho > 0.0) || !std::isfinite(hop.rho))
            throw config_error("link: rho must be finite and > 0");
        validate(hop.fading);
    }
    if (!(link.gamma_th > 0.0))
        throw config_error("link: gamma_th must be > 0");
    if (const auto* fixed = std::get_if<FixedGains>(&link.amplification)) {
        if (fixed->gains.size() != link.n_hops() - 1)
            throw config_error("link: fixed gains must have length N - 1");
        for (double g : fixed->gains)
            if (!(g > 0.0))
                throw config_error("link: gains must be > 0");
    }
}

std::vector<double> amplification_gains(const LinkSpec& link, double gamma_bar)
{
    const std::size_t n_relays = link.n_hops() - 1;
    std::vector<double> gains(n_relays);
    if (const auto* fixed = std::get_if<FixedGains>(&link.amplification))
        return fixed->gains;
    const bool paper = std::holds_alternative<PaperGain>(link.amplification);
    for (std::size_t n = 0; n < n_relays; ++n) {
        const HopSpec& hop = link.hops[n];
        double denom = mean_power(hop.fading);
        if (paper)
            denom += hop.rho / gamma_bar;
        gains[n] = 1.0 / std::sqrt(denom);
    }
    return gains;
}

double end_to_end_snr(const LinkSpec& link, double gamma_bar,
                      std::span<const double> powers)
{
    const std::size_t n = link.n_hops();
    const std::vector<double> gains = amplification_gains(link, gamma_bar);
    // X_n = A_{n-1}^2 |h_n|^2 with A_0 = 1.
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = i == 0 ? 1.0 : gains[i - 1];
        x[i] = a * a * powers[i];
    }
    double numer = 1.0;
    for (double v : x)
        numer *= v;
    // Denominator term n: rho_n * prod_{j > n} X_j (suffix products).
    double denom = 0.0;
    double suffix = 1.0;
    for (std::size_t i = n; i-- > 0;) {
        denom += link.hops[i].rho * suffix;
        suffix *= x[i];
    }
    if (denom == 0.0)
        return 0.0;
    return gamma_bar * numer / denom;
}

std::vector<double> per_hop_avg_snr(const LinkSpec& link, double gamma_bar)
{
    std::vector<double> out(link.n_hops());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mean_power(link.hops[i].fading) / link.hops[i].rho * gamma_bar;
    return out;
}

std::vector<FadingModel> effective_models(const LinkSpec& link,
                                          std::span<const double> gains)
{
    std::vector<FadingModel> out;
    out.reserve(link.n_hops());
    for (std::size_t i = 0; i < link.n_hops(); ++i) {
        const double a = i == 0 ? 1.0 : gains[i - 1];
        out.push_back(scaled(link.hops[i].fading, a * a));
    }
    return out;
}

std::vector<double> asymptotic_gains(const LinkSpec& link)
{
    if (const auto* fixed = std::get_if<FixedGains>(&link.amplification))
        return fixed->gains;
    LinkSpec limit = link;
    limit.amplification = AsymptoticGain{};
    return amplification_gains(limit, 1.0);
}

} // namespace afrelay
