#ifndef AFRELAY_ASYMPTOTICS_HPP
#define AFRELAY_ASYMPTOTICS_HPP

#include "afrelay/outage_integral.hpp"

#include <vector>

namespace afrelay {

// Minimum shape parameter across hops, its multiplicity, and the ordered
// (1-based) hop indices that attain it.
struct PoleSpec {
    double m = 0.0;
    int mu = 0;
    std::vector<int> hop_indices;
};

PoleSpec min_pole(const LinkSpec& link);

// Partition of the index tuples by the order of the integrand pole at
// s = m: classes[r-1] holds the tuples whose pole has order r.  Tuples
// whose integrand has no pole at s = m land in the remainder.
struct IndexPartition {
    std::vector<std::vector<IndexTuple>> classes;
    std::vector<IndexTuple> remainder;
};

IndexPartition partition_index_tuples(const std::vector<IndexTuple>& tuples,
                                      const PoleSpec& pole);

// High-SNR series P_o ~ sum_p coeffs[p] (log gbar)^p gbar^{-m}.  The
// coefficients are gamma_bar independent (asymptotic-limit gains).
struct AsymptoticSeries {
    double m = 0.0;
    int mu = 0;
    std::vector<double> coeffs; // c_0 .. c_{mu-1}
    double big_a = 0.0;         // the constant A of the semi-general formula
    std::string note;           // warnings (quasi-identical shapes, ties)

    double eval(double gamma_bar) const;
};

AsymptoticSeries expansion_coeffs(const LinkSpec& link,
                                  const ExpansionConfig& config);

// Leading-order behavior P_o ~ psi (log gbar)^{mu-1} gbar^{-m}.
struct LeadingOrder {
    double psi = 0.0; // coding gain
    int mu = 0;
    double m = 0.0;

    double eval(double gamma_bar) const;
};

LeadingOrder leading_order(const LinkSpec& link);

// Two-term finite-SNR diversity m - (mu - 1) lnln(gbar) / ln(gbar).
// Requires gamma_bar > e.
double finite_snr_diversity(const LinkSpec& link, double gamma_bar);

// SNR above which the leading-order term decreases monotonically:
// e^{(mu - 1) / m}.
double convergence_threshold(const PoleSpec& pole);

OutageEstimate outage_asymptotic_full(const LinkSpec& link, double gamma_bar,
                                      const ExpansionConfig& config);
OutageEstimate outage_asymptotic_leading(const LinkSpec& link,
                                         double gamma_bar);

} // namespace afrelay

#endif
