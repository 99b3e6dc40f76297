#include "afrelay/fading.hpp"
#include "afrelay/errors.hpp"
#include "afrelay/rng.hpp"

#include <cmath>

namespace afrelay {

namespace {

template <class... Fs> struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

double hoyt_2f1_arg(double q)
{
    const double t = (1.0 - q * q) / (1.0 + q * q);
    return t * t;
}

} // namespace

double bessel_i0_scaled(double x)
{
    x = std::fabs(x);
    if (x < 12.0) {
        // Power series sum (x/2)^{2k} / (k!)^2.
        double term = 1.0;
        double sum = 1.0;
        const double x2 = 0.25 * x * x;
        for (int k = 1; k < 60; ++k) {
            term *= x2 / (static_cast<double>(k) * k);
            sum += term;
            if (term < 1e-17 * sum)
                break;
        }
        return sum * std::exp(-x);
    }
    // Asymptotic expansion of e^{-x} I0(x) ~ (2 pi x)^{-1/2} sum a_k / x^k.
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 10; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv8x / k;
        sum += term;
    }
    return sum / std::sqrt(2.0 * 3.14159265358979323846 * x);
}

void validate(const FadingModel& model)
{
    std::visit(
        overloaded{
            [](const Nakagami& f) {
                if (!(f.m > 0.0) || !(f.theta > 0.0))
                    throw config_error("nakagami: m and theta must be > 0");
            },
            [](const Weibull& f) {
                if (!(f.m > 0.0) || !(f.theta > 0.0))
                    throw config_error("weibull: m and theta must be > 0");
            },
            [](const Rician& f) {
                if (!(f.K >= 0.0) || !(f.theta > 0.0))
                    throw config_error("rician: K must be >= 0, theta > 0");
            },
            [](const Hoyt& f) {
                if (!(f.q >= 0.05 && f.q <= 1.0) || !(f.theta > 0.0))
                    throw config_error(
                        "hoyt: q must lie in [0.05, 1], theta > 0");
            },
        },
        model);
}

const char* family_name(const FadingModel& model)
{
    return std::visit(overloaded{
                          [](const Nakagami&) { return "nakagami"; },
                          [](const Weibull&) { return "weibull"; },
                          [](const Rician&) { return "rician"; },
                          [](const Hoyt&) { return "hoyt"; },
                      },
                      model);
}

double pdf(const FadingModel& model, double x)
{
    if (x < 0.0)
        return 0.0;
    return std::visit(
        overloaded{
            [&](const Nakagami& f) {
                const double norm =
                    std::exp(-f.m * std::log(f.theta) - std::lgamma(f.m));
                if (x == 0.0)
                    return f.m > 1.0 ? 0.0
                                     : (f.m == 1.0 ? norm : HUGE_VAL);
                return norm * std::pow(x, f.m - 1.0) * std::exp(-x / f.theta);
            },
            [&](const Weibull& f) {
                if (x == 0.0)
                    return f.m > 1.0 ? 0.0
                                     : (f.m == 1.0 ? 1.0 / f.theta : HUGE_VAL);
                const double u = std::pow(x / f.theta, f.m);
                return f.m / x * u * std::exp(-u);
            },
            [&](const Rician& f) {
                const double k1 = f.K + 1.0;
                const double b = std::sqrt(4.0 * f.K * k1 * x / f.theta);
                return k1 / f.theta *
                       std::exp(-(f.K + k1 * x / f.theta) + b) *
                       bessel_i0_scaled(b);
            },
            [&](const Hoyt& f) {
                const double q2 = f.q * f.q;
                const double a = (1.0 + q2) * (1.0 + q2) / (4.0 * q2 * f.theta);
                const double b = (1.0 - q2 * q2) / (4.0 * q2 * f.theta);
                return (1.0 + q2) / (2.0 * f.q * f.theta) *
                       std::exp(-(a - b) * x) * bessel_i0_scaled(b * x);
            },
        },
        model);
}

cxd mellin(const FadingModel& model, cxd s)
{
    return std::visit(
        overloaded{
            [&](const Nakagami& f) {
                return std::exp((s - 1.0) * std::log(f.theta) +
                                log_gamma(s - 1.0 + f.m) - std::lgamma(f.m));
            },
            [&](const Weibull& f) {
                return std::exp((s - 1.0) * std::log(f.theta) +
                                log_gamma((s - 1.0) / f.m + 1.0));
            },
            [&](const Rician& f) {
                return std::exp(-f.K +
                                (s - 1.0) * std::log(f.theta / (f.K + 1.0)) +
                                log_gamma(s)) *
                       hyp1f1(s, 1.0, f.K);
            },
            [&](const Hoyt& f) {
                const double b = 2.0 * f.q / (1.0 + f.q * f.q);
                return std::exp((2.0 * s - 1.0) * std::log(b) +
                                (s - 1.0) * std::log(f.theta) + log_gamma(s)) *
                       hyp2f1(0.5 * s, 0.5 * (s + 1.0), 1.0,
                              hoyt_2f1_arg(f.q));
            },
        },
        model);
}

double sample(const FadingModel& model, TrialRng& rng)
{
    return std::visit(
        overloaded{
            [&](const Nakagami& f) {
                return rng.gamma_variate(f.m, f.theta);
            },
            [&](const Weibull& f) {
                return f.theta * std::pow(-std::log(rng.uniform()), 1.0 / f.m);
            },
            [&](const Rician& f) {
                // |mu + g|^2, deterministic component mu, circular Gaussian g
                // of total variance theta / (K + 1).
                const double mu = std::sqrt(f.K * f.theta / (f.K + 1.0));
                const double sd = std::sqrt(0.5 * f.theta / (f.K + 1.0));
                const double re = mu + sd * rng.normal();
                const double im = sd * rng.normal();
                return re * re + im * im;
            },
            [&](const Hoyt& f) {
                const double q2 = f.q * f.q;
                const double sx = std::sqrt(f.theta / (1.0 + q2));
                const double sy = std::sqrt(q2 * f.theta / (1.0 + q2));
                const double x = sx * rng.normal();
                const double y = sy * rng.normal();
                return x * x + y * y;
            },
        },
        model);
}

double mean_power(const FadingModel& model)
{
    return std::visit(
        overloaded{
            [](const Nakagami& f) { return f.m * f.theta; },
            [](const Weibull& f) {
                return f.theta * std::tgamma(1.0 + 1.0 / f.m);
            },
            [](const Rician& f) { return f.theta; },
            [](const Hoyt& f) { return f.theta; },
        },
        model);
}

double min_shape(const FadingModel& model)
{
    return std::visit(overloaded{
                          [](const Nakagami& f) { return f.m; },
                          [](const Weibull& f) { return f.m; },
                          [](const Rician&) { return 1.0; },
                          [](const Hoyt&) { return 1.0; },
                      },
                      model);
}

PoleLadder pole_ladder(const FadingModel& model)
{
    return std::visit(
        overloaded{
            [](const Nakagami& f) { return PoleLadder{f.m, 1.0}; },
            [](const Weibull& f) { return PoleLadder{f.m, f.m}; },
            [](const Rician&) { return PoleLadder{1.0, 1.0}; },
            [](const Hoyt&) { return PoleLadder{1.0, 1.0}; },
        },
        model);
}

FadingModel scaled(const FadingModel& model, double power_scale)
{
    FadingModel out = model;
    std::visit([&](auto& f) { f.theta *= power_scale; }, out);
    return out;
}

double mellin_lambda_const(const FadingModel& model, int lambda)
{
    const double lam = lambda;
    return std::visit(
        overloaded{
            [&](const Nakagami& f) {
                return std::pow(f.theta, lam) / std::tgamma(f.m);
            },
            [&](const Weibull& f) { return std::pow(f.theta, lam); },
            [&](const Rician& f) {
                return std::exp(-f.K) * std::pow(f.theta / (f.K + 1.0), lam);
            },
            [&](const Hoyt& f) {
                const double b = 2.0 * f.q / (1.0 + f.q * f.q);
                return std::pow(b, 2.0 * lam + 1.0) * std::pow(f.theta, lam);
            },
        },
        model);
}

double mellin_scale(const FadingModel& model)
{
    return std::visit(
        overloaded{
            [](const Nakagami& f) { return f.theta; },
            [](const Weibull& f) { return f.theta; },
            [](const Rician& f) { return f.theta / (f.K + 1.0); },
            [](const Hoyt& f) {
                const double b = 2.0 * f.q / (1.0 + f.q * f.q);
                return b * b * f.theta;
            },
        },
        model);
}

cxd mellin_special(const FadingModel& model, int lambda, cxd s)
{
    const double lam = lambda;
    return std::visit(
        overloaded{
            [&](const Nakagami& f) { return gamma(f.m + lam - s); },
            [&](const Weibull& f) {
                return gamma(1.0 + (lam - s) / f.m);
            },
            [&](const Rician& f) {
                return gamma(1.0 + lam - s) * hyp1f1(1.0 + lam - s, 1.0, f.K);
            },
            [&](const Hoyt& f) {
                return gamma(1.0 + lam - s) *
                       hyp2f1(0.5 * (1.0 + lam - s), 0.5 * (2.0 + lam - s),
                              1.0, hoyt_2f1_arg(f.q));
            },
        },
        model);
}

} // namespace afrelay
