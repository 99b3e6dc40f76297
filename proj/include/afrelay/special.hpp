#ifndef AFRELAY_SPECIAL_HPP
#define AFRELAY_SPECIAL_HPP

#include <complex>
#include <functional>
#include <vector>

namespace afrelay {

using cxd = std::complex<double>;

// Principal branch of log Gamma(z).  Lanczos rational approximation for
// Re(z) >= 0.5, reflection formula otherwise.  Throws numeric_error when z
// is a nonpositive integer.
cxd log_gamma(cxd z);

// Gamma(z) = exp(log_gamma(z)).
cxd gamma(cxd z);

// Confluent hypergeometric 1F1(a, b; k) by direct series summation.
// Arguments in this project are bounded (k is a Rice factor), so the plain
// series converges quickly.  Throws numeric_error on non-convergence or
// when b is a nonpositive integer.
cxd hyp1f1(cxd a, cxd b, double k);

// Gauss hypergeometric 2F1(a, b; c; x) for real x in [0, 1).  Throws
// numeric_error on non-convergence (x too close to 1) or when c is a
// nonpositive integer.
cxd hyp2f1(cxd a, cxd b, cxd c, double x);

// Derivatives f^(0..max_order)(center) of a function analytic on the closed
// disc |s - center| <= radius, via the Cauchy integral evaluated with the
// trapezoidal rule on the circle.  Node count is doubled until successive
// estimates agree to relative 1e-10.  The caller guarantees the disc is
// pole free; a radius enclosing a singularity shows up as non-convergence.
std::vector<cxd> cauchy_derivatives(const std::function<cxd(cxd)>& f,
                                    cxd center, int max_order, double radius);

} // namespace afrelay

#endif
