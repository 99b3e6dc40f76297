#ifndef AFRELAY_FADING_HPP
#define AFRELAY_FADING_HPP

#include "afrelay/special.hpp"

#include <variant>

namespace afrelay {

class TrialRng;

// Channel power distributions.  theta is always the scale symbol of the
// corresponding density: mean power is m*theta for Nakagami,
// theta*Gamma(1 + 1/m) for Weibull, and theta itself for Rician and Hoyt.

struct Nakagami {
    double m;     // shape, > 0
    double theta; // scale, > 0
};

struct Weibull {
    double m;     // shape, > 0
    double theta; // scale, > 0
};

struct Rician {
    double K;     // Rice factor, >= 0
    double theta; // mean power, > 0
};

struct Hoyt {
    double q;     // in [0.05, 1]; q -> 0 drives the 2F1 argument to 1
    double theta; // mean power, > 0
};

using FadingModel = std::variant<Nakagami, Weibull, Rician, Hoyt>;

// Throws config_error when a parameter is outside its admissible range.
void validate(const FadingModel& model);

const char* family_name(const FadingModel& model);

// Channel power density f_X(x); zero for x < 0.
double pdf(const FadingModel& model, double x);

// Mellin transform M[f_X; s] = E[X^{s-1}] at the raw Mellin argument.
// Throws numeric_error when s sits on a pole of the family's Gamma factors.
cxd mellin(const FadingModel& model, cxd s);

// One channel power draw.
double sample(const FadingModel& model, TrialRng& rng);

double mean_power(const FadingModel& model);

// Pole ladder of M[f_X; 1 + lambda - s] in s, relative to the cumulative
// index lambda: simple poles at s = lambda + offset + step*j, j = 0, 1, ...
struct PoleLadder {
    double offset;
    double step;
};

// Smallest pole offset; this is the paper's per-hop shape parameter
// (m for Nakagami/Weibull, 1 for Rician/Hoyt).
double min_shape(const FadingModel& model);

PoleLadder pole_ladder(const FadingModel& model);

// The same model with its power scaled by a positive factor (absorbs the
// squared amplification gain); every family scales through theta.
FadingModel scaled(const FadingModel& model, double power_scale);

// Factorization M[f_X; 1 + lambda - s] = const(lambda) * scale^{-s} * S(s)
// used by the high-SNR machinery: the scale factors combine into the
// constant A of the semi-general expansion, S carries all s dependence.
double mellin_lambda_const(const FadingModel& model, int lambda);
double mellin_scale(const FadingModel& model);
cxd mellin_special(const FadingModel& model, int lambda, cxd s);

// Modified Bessel I0, exponentially scaled: e^{-|x|} I0(x).
double bessel_i0_scaled(double x);

} // namespace afrelay

#endif
