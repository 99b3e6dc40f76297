#ifndef AFRELAY_OUTAGE_INTEGRAL_HPP
#define AFRELAY_OUTAGE_INTEGRAL_HPP

#include "afrelay/estimate.hpp"
#include "afrelay/link.hpp"

#include <vector>

namespace afrelay {

struct QuadratureConfig {
    double truncation_height = 50.0; // initial |Im s| cutoff, doubled to converge
    int panel_points = 64;            // Gauss-Legendre nodes per panel
    double panel_height = 4.0;        // panel width along the vertical line
};

struct ExpansionConfig {
    // Correction orders L_1..L_{N-1}; empty means L_n = 2 for every hop.
    std::vector<int> orders;
    double kappa_offset = 0.5; // contour abscissa margin beyond lambda_{N-1}
    QuadratureConfig quadrature;

    std::vector<int> orders_for(std::size_t n_hops) const;
};

// One term of the correction sum: indices ell_1..ell_{N-1}, cumulative sums
// lambda_0..lambda_{N-1}, and the sign/weight prefactor.
struct IndexTuple {
    std::vector<int> ell;
    std::vector<int> lambda; // length N, lambda[0] = 0
    int sign = 1;            // (-1)^{lambda_{N-1}}
    double weight = 1.0;     // prod (rho_n / rho_N)^{ell_n} / ell_n!

    int lambda_last() const { return lambda.back(); }
};

// All prod L_n tuples in lexicographic order.  rho carries the per-hop
// noise scalings (length N).
std::vector<IndexTuple> enumerate_index_tuples(const ExpansionConfig& config,
                                               const std::vector<double>& rho);

struct PoleList {
    struct Pole {
        double location; // > 0
        int order;       // >= 1
    };
    std::vector<Pole> poles;     // strictly increasing locations
    bool has_origin_pole = false; // simple pole at s = 0 (lambda_{N-1} = 0)
};

// Mellin-Barnes integrand of one index tuple at the point s:
// (rho_N gamma_th / gamma_bar)^s * Gamma(lambda_{N-1} - s) / Gamma(1 - s)
//   * prod_n M[f_{X_n}; 1 + lambda_{n-1} - s]
// with gain-scaled hop densities.  The Gamma ratio is evaluated in closed
// form: -1/s when lambda_{N-1} = 0, else the polynomial prod_k (k - s).
cxd integrand(const LinkSpec& link, const IndexTuple& tuple, double gamma_bar,
              cxd s);

// Prop.-1 engine: numerical integration along Re(s) = -(lambda_{N-1} +
// kappa_offset), upper half line doubled by conjugate symmetry, truncation
// height doubled until the estimate is stable to relative 1e-9.
OutageEstimate outage_contour(const LinkSpec& link, double gamma_bar,
                              const ExpansionConfig& config);

// Poles of the tuple integrand in (0, s_max], merged across the per-hop
// Gamma ladders with coincident locations accumulating their orders.  The
// Gamma(lambda_{N-1} - s) / Gamma(1 - s) ratio contributes no poles for
// lambda_{N-1} >= 1 (its ladder is cancelled by the denominator zeros); for
// lambda_{N-1} = 0 the ratio is -1/s and the boundary pole at the origin is
// flagged separately.
PoleList pole_enumeration(const LinkSpec& link, const IndexTuple& tuple,
                          double s_max);

// Residue-series engine: same tuple sum, each contour integral replaced by
// minus the sum of residues to the right of the line.  Residues of order r
// come from Cauchy-integral derivatives of (s - s0)^r * integrand.
// s_max <= 0 picks the default cutoff from gamma_bar.
OutageEstimate outage_residue_series(const LinkSpec& link, double gamma_bar,
                                     const ExpansionConfig& config,
                                     double s_max = 0.0);

// Default residue cutoff m_min + 40 / ln(gamma_bar), clamped to
// [m_min + 2, m_min + 25].
double default_s_max(const LinkSpec& link, double gamma_bar);

} // namespace afrelay

#endif
