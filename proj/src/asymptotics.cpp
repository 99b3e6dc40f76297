#include "afrelay/asymptotics.hpp"
#include "afrelay/errors.hpp"

#include <algorithm>
#include <cmath>

namespace afrelay {

namespace {

constexpr double kShapeTol = 1e-9;

double binomial(int n, int k)
{
    double v = 1.0;
    for (int i = 0; i < k; ++i)
        v = v * (n - i) / (i + 1);
    return v;
}

double factorial(int n)
{
    double v = 1.0;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

// Gamma(lambda - s) / Gamma(1 - s) in closed form (same convention as the
// contour engine).
cxd gamma_ratio(int lambda_last, cxd s)
{
    if (lambda_last == 0)
        return -1.0 / s;
    cxd prod = 1.0;
    for (int k = 1; k < lambda_last; ++k)
        prod *= static_cast<double>(k) - s;
    return prod;
}

} // namespace

PoleSpec min_pole(const LinkSpec& link)
{
    PoleSpec spec;
    spec.m = min_shape(link.hops.front().fading);
    for (const HopSpec& hop : link.hops)
        spec.m = std::min(spec.m, min_shape(hop.fading));
    for (std::size_t i = 0; i < link.n_hops(); ++i)
        if (std::fabs(min_shape(link.hops[i].fading) - spec.m) <= kShapeTol)
            spec.hop_indices.push_back(static_cast<int>(i) + 1);
    spec.mu = static_cast<int>(spec.hop_indices.size());
    return spec;
}

IndexPartition partition_index_tuples(const std::vector<IndexTuple>& tuples,
                                      const PoleSpec& pole)
{
    IndexPartition out;
    out.classes.resize(pole.mu);
    for (const IndexTuple& t : tuples) {
        // lambda_{q_r - 1} is nondecreasing in r, so the r with
        // lambda_{q_r - 1} = 0 form a prefix; the tuple belongs to the last
        // class of that prefix.
        int r = 0;
        for (int i = 0; i < pole.mu; ++i) {
            if (t.lambda[pole.hop_indices[i] - 1] == 0)
                r = i + 1;
            else
                break;
        }
        if (r == 0)
            out.remainder.push_back(t);
        else
            out.classes[r - 1].push_back(t);
    }
    return out;
}

double AsymptoticSeries::eval(double gamma_bar) const
{
    const double lg = std::log(gamma_bar);
    double sum = 0.0;
    double lg_pow = 1.0;
    for (double c : coeffs) {
        sum += c * lg_pow;
        lg_pow *= lg;
    }
    return sum * std::pow(gamma_bar, -m);
}

AsymptoticSeries expansion_coeffs(const LinkSpec& link,
                                  const ExpansionConfig& config)
{
    validate(link);
    const PoleSpec pole = min_pole(link);
    const std::vector<double> gains = asymptotic_gains(link);
    const std::vector<FadingModel> models = effective_models(link, gains);

    std::vector<double> rho;
    for (const HopSpec& hop : link.hops)
        rho.push_back(hop.rho);

    AsymptoticSeries series;
    series.m = pole.m;
    series.mu = pole.mu;
    series.coeffs.assign(pole.mu, 0.0);

    double scale_prod = 1.0;
    for (const FadingModel& m : models)
        scale_prod *= mellin_scale(m);
    series.big_a = link.rho_last() * link.gamma_th / scale_prod;
    const double log_a = std::log(series.big_a);
    const double a_pow_m = std::pow(series.big_a, pole.m);

    // Diagnostics: near-coincident shapes converge slowly; a tie between a
    // Nakagami/Weibull shape and the implicit Rician/Hoyt shape 1 goes
    // beyond the fading mixes the expansion was derived for.
    bool near_tie = false;
    bool gamma_family = false;
    bool unit_family = false;
    for (const HopSpec& hop : link.hops) {
        const double gap = min_shape(hop.fading) - pole.m;
        if (gap > kShapeTol && gap < 0.05)
            near_tie = true;
        if (gap <= kShapeTol) {
            const bool unit = std::holds_alternative<Rician>(hop.fading) ||
                              std::holds_alternative<Hoyt>(hop.fading);
            (unit ? unit_family : gamma_family) = true;
        }
    }
    if (near_tie)
        series.note = "quasi-identical shape parameters; expansion converges "
                      "slowly";
    if (gamma_family && unit_family) {
        if (!series.note.empty())
            series.note += "; ";
        series.note += "shape tie across fading families (extrapolated pole "
                       "order handling)";
    }

    const std::vector<IndexTuple> tuples = enumerate_index_tuples(config, rho);
    const IndexPartition partition = partition_index_tuples(tuples, pole);

    // Nearest other singularity above m (pole ladders all start at or above
    // m); below m only the origin pole of the lambda = 0 tuple matters.
    for (int r = 1; r <= pole.mu; ++r) {
        for (const IndexTuple& t : partition.classes[r - 1]) {
            double next_gap = pole.m; // distance to the origin
            for (std::size_t n = 0; n < link.n_hops(); ++n) {
                const PoleLadder ladder = pole_ladder(link.hops[n].fading);
                double loc = t.lambda[n] + ladder.offset;
                while (loc <= pole.m + kShapeTol)
                    loc += ladder.step;
                next_gap = std::min(next_gap, loc - pole.m);
            }
            const double radius = 0.45 * next_gap;

            double const_prod = 1.0;
            for (std::size_t n = 0; n < models.size(); ++n)
                const_prod *= mellin_lambda_const(models[n], t.lambda[n]);

            auto c_r = [&](cxd s) {
                cxd v = std::pow(s - pole.m, static_cast<double>(r)) *
                        gamma_ratio(t.lambda_last(), s);
                for (std::size_t n = 0; n < models.size(); ++n)
                    v *= mellin_special(models[n], t.lambda[n], s);
                return v;
            };
            const std::vector<cxd> derivs =
                cauchy_derivatives(c_r, pole.m, r - 1, radius);

            const double prefactor =
                a_pow_m * t.sign * t.weight * const_prod;
            for (int l = 0; l <= r - 1; ++l) {
                const double dl = derivs[r - 1 - l].real() /
                                  (factorial(r - 1 - l) * factorial(l));
                for (int p = 0; p <= l; ++p) {
                    const double sgn = p % 2 == 0 ? 1.0 : -1.0;
                    series.coeffs[p] += prefactor * dl * binomial(l, p) *
                                        sgn * std::pow(log_a, l - p);
                }
            }
        }
    }
    return series;
}

double LeadingOrder::eval(double gamma_bar) const
{
    return psi * std::pow(std::log(gamma_bar), mu - 1) *
           std::pow(gamma_bar, -m);
}

LeadingOrder leading_order(const LinkSpec& link)
{
    const AsymptoticSeries series = expansion_coeffs(link, ExpansionConfig{});
    return LeadingOrder{series.coeffs.back(), series.mu, series.m};
}

double finite_snr_diversity(const LinkSpec& link, double gamma_bar)
{
    if (!(gamma_bar > std::exp(1.0)))
        throw numeric_error("finite_snr_diversity requires gamma_bar > e");
    const PoleSpec pole = min_pole(link);
    const double lg = std::log(gamma_bar);
    return pole.m - (pole.mu - 1) * std::log(lg) / lg;
}

double convergence_threshold(const PoleSpec& pole)
{
    return std::exp((pole.mu - 1) / pole.m);
}

OutageEstimate outage_asymptotic_full(const LinkSpec& link, double gamma_bar,
                                      const ExpansionConfig& config)
{
    const AsymptoticSeries series = expansion_coeffs(link, config);
    OutageEstimate est;
    est.method = Method::asymptotic_full;
    est.note = series.note;
    est.value = std::clamp(series.eval(gamma_bar), 0.0, 1.0);
    return est;
}

OutageEstimate outage_asymptotic_leading(const LinkSpec& link,
                                         double gamma_bar)
{
    const LeadingOrder lead = leading_order(link);
    OutageEstimate est;
    est.method = Method::asymptotic_leading;
    est.value = std::clamp(lead.eval(gamma_bar), 0.0, 1.0);
    return est;
}

} // namespace afrelay
