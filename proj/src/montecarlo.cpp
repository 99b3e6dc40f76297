#include "afrelay/montecarlo.hpp"
#include "afrelay/errors.hpp"
#include "afrelay/rng.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace afrelay {

namespace {

// Per-trial state shared by the estimator and the consistency check: the
// effective hop powers X_n = A_{n-1}^2 |h_n|^2 for one draw.
struct TrialSampler {
    const LinkSpec& link;
    std::vector<double> gain_sq; // A_{n-1}^2 with A_0 = 1
    std::uint64_t seed;

    TrialSampler(const LinkSpec& l, double gamma_bar, std::uint64_t s)
        : link(l), seed(s)
    {
        const std::vector<double> gains = amplification_gains(l, gamma_bar);
        gain_sq.push_back(1.0);
        for (double g : gains)
            gain_sq.push_back(g * g);
    }

    void draw(std::int64_t trial, std::vector<double>& x) const
    {
        TrialRng rng(seed, static_cast<std::uint64_t>(trial));
        for (std::size_t n = 0; n < link.n_hops(); ++n)
            x[n] = gain_sq[n] * sample(link.hops[n].fading, rng);
    }
};

double snr_from_powers(const LinkSpec& link, double gamma_bar,
                       const std::vector<double>& x)
{
    double numer = gamma_bar;
    for (double v : x)
        numer *= v;
    double denom = 0.0;
    double suffix = 1.0;
    for (std::size_t i = x.size(); i-- > 0;) {
        denom += link.hops[i].rho * suffix;
        suffix *= x[i];
    }
    return denom == 0.0 ? 0.0 : numer / denom;
}

} // namespace

OutageEstimate estimate_outage(const LinkSpec& link, double gamma_bar,
                               std::int64_t trials, std::uint64_t seed,
                               int workers)
{
    validate(link);
    if (trials < 1)
        throw config_error("monte carlo: trials must be >= 1");
    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<int>(
        std::min<std::int64_t>(workers, trials));

    const TrialSampler sampler(link, gamma_bar, seed);
    std::vector<std::int64_t> counts(workers, 0);

    auto run_range = [&](std::int64_t lo, std::int64_t hi,
                         std::int64_t& count) {
        std::vector<double> x(link.n_hops());
        for (std::int64_t t = lo; t < hi; ++t) {
            sampler.draw(t, x);
            if (snr_from_powers(link, gamma_bar, x) < link.gamma_th)
                ++count;
        }
    };

    if (workers == 1) {
        run_range(0, trials, counts[0]);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = w * chunk;
            const std::int64_t hi = std::min<std::int64_t>(lo + chunk, trials);
            pool.emplace_back(run_range, lo, hi, std::ref(counts[w]));
        }
        for (std::thread& th : pool)
            th.join();
    }

    std::int64_t hits = 0;
    for (std::int64_t c : counts)
        hits += c;

    OutageEstimate est;
    est.method = Method::monte_carlo;
    est.trials = trials;
    est.value = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error =
        std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
    return est;
}

RecursionReport recursion_consistency_check(const LinkSpec& link,
                                            double gamma_bar,
                                            std::int64_t trials,
                                            std::uint64_t seed)
{
    validate(link);
    const TrialSampler sampler(link, gamma_bar, seed);
    const std::size_t n = link.n_hops();

    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i)
        sigma[i] = link.hops[i].rho * link.gamma_th / gamma_bar;

    RecursionReport report;
    report.trials = trials;
    std::vector<double> x(n);
    for (std::int64_t t = 0; t < trials; ++t) {
        sampler.draw(t, x);
        const bool direct =
            snr_from_powers(link, gamma_bar, x) < link.gamma_th;
        double y = x[0];
        for (std::size_t i = 1; i < n; ++i)
            y = (y - sigma[i - 1]) * x[i];
        const bool recursive = y < sigma[n - 1];
        if (direct != recursive)
            ++report.disagreements;
    }
    return report;
}

} // namespace afrelay
