#ifndef AFRELAY_ESTIMATE_HPP
#define AFRELAY_ESTIMATE_HPP

#include <cstdint>
#include <string>

namespace afrelay {

enum class Method {
    contour,
    residue_series,
    asymptotic_full,
    asymptotic_leading,
    monte_carlo,
};

const char* method_name(Method method);

struct OutageEstimate {
    double value = 0.0;          // clamped to [0, 1]
    Method method = Method::contour;
    double std_error = 0.0;      // Monte Carlo only: sqrt(p(1-p)/trials)
    double tolerance = 0.0;      // analytic engines: quadrature/tail bound
    std::int64_t trials = 0;     // Monte Carlo only
    std::string note;            // warnings (slow convergence, tail size...)
};

} // namespace afrelay

#endif
