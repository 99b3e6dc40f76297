#include "afrelay/outage_integral.hpp"
#include "afrelay/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace afrelay {

namespace {

std::vector<int> default_orders(std::size_t n_minus_1)
{
    return std::vector<int>(n_minus_1, 2);
}

// Gauss-Legendre nodes/weights on [-1, 1], cached per point count.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_rule(int n)
{
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

// Gamma(lambda - s) / Gamma(1 - s) for integer lambda >= 0, evaluated in
// closed form: -1/s for lambda = 0, otherwise prod_{k=1}^{lambda-1} (k - s).
cxd gamma_ratio(int lambda_last, cxd s)
{
    if (lambda_last == 0)
        return -1.0 / s;
    cxd prod = 1.0;
    for (int k = 1; k < lambda_last; ++k)
        prod *= static_cast<double>(k) - s;
    return prod;
}

// Per-(link, gamma_bar) evaluation context shared by both engines.
struct EngineContext {
    std::vector<FadingModel> models; // gain-scaled
    std::vector<double> rho;
    double z0;    // rho_N gamma_th / gamma_bar
    double z_eff; // z0 / prod of Mellin scales (decay base of the residue tail)

    EngineContext(const LinkSpec& link, double gamma_bar)
    {
        const std::vector<double> gains = amplification_gains(link, gamma_bar);
        models = effective_models(link, gains);
        rho.reserve(link.n_hops());
        for (const HopSpec& hop : link.hops)
            rho.push_back(hop.rho);
        z0 = link.rho_last() * link.gamma_th / gamma_bar;
        double scale_prod = 1.0;
        for (const FadingModel& m : models)
            scale_prod *= mellin_scale(m);
        z_eff = z0 / scale_prod;
    }

    cxd eval(const IndexTuple& tuple, cxd s) const
    {
        cxd v = std::pow(cxd(z0), s) * gamma_ratio(tuple.lambda_last(), s);
        for (std::size_t n = 0; n < models.size(); ++n)
            v *= mellin(models[n], 1.0 + static_cast<double>(tuple.lambda[n]) - s);
        return v;
    }
};

} // namespace

std::vector<int> ExpansionConfig::orders_for(std::size_t n_hops) const
{
    if (orders.empty())
        return default_orders(n_hops - 1);
    if (orders.size() != n_hops - 1)
        throw config_error("expansion: orders must have length N - 1");
    for (int L : orders)
        if (L < 1)
            throw config_error("expansion: orders must be >= 1");
    return orders;
}

std::vector<IndexTuple> enumerate_index_tuples(const ExpansionConfig& config,
                                               const std::vector<double>& rho)
{
    const std::size_t n_hops = rho.size();
    const std::vector<int> L = config.orders_for(n_hops);
    std::size_t count = 1;
    for (int Ln : L)
        count *= static_cast<std::size_t>(Ln);

    std::vector<IndexTuple> tuples;
    tuples.reserve(count);
    std::vector<int> ell(L.size(), 0);
    for (;;) {
        IndexTuple t;
        t.ell = ell;
        t.lambda.resize(n_hops);
        t.lambda[0] = 0;
        t.weight = 1.0;
        double factorial = 1.0;
        for (std::size_t n = 0; n < ell.size(); ++n) {
            t.lambda[n + 1] = t.lambda[n] + ell[n];
            factorial = 1.0;
            for (int j = 2; j <= ell[n]; ++j)
                factorial *= j;
            t.weight *= std::pow(rho[n] / rho.back(), ell[n]) / factorial;
        }
        t.sign = t.lambda_last() % 2 == 0 ? 1 : -1;
        tuples.push_back(std::move(t));

        // lexicographic increment, last index fastest
        std::size_t idx = L.size();
        while (idx-- > 0) {
            if (++ell[idx] < L[idx])
                break;
            ell[idx] = 0;
            if (idx == 0)
                return tuples;
        }
    }
}

cxd integrand(const LinkSpec& link, const IndexTuple& tuple, double gamma_bar,
              cxd s)
{
    return EngineContext(link, gamma_bar).eval(tuple, s);
}

namespace {

// Line abscissa for one tuple: a margin left of the integrand's first
// actual singularity.  That is the origin for lambda_{N-1} = 0 (the -1/s
// factor), otherwise the first hop-ladder point whose accumulated Gamma
// order exceeds the order-1 zero the ratio polynomial places at each
// integer in [1, lambda_{N-1} - 1].
double contour_abscissa(const EngineContext& ctx, const IndexTuple& tuple,
                        double kappa_offset)
{
    const int lam = tuple.lambda_last();
    if (lam == 0)
        return -kappa_offset;

    double reach = 0.0;
    std::vector<double> points;
    for (std::size_t n = 0; n < ctx.models.size(); ++n) {
        const PoleLadder ladder = pole_ladder(ctx.models[n]);
        reach = std::max(reach, lam + ladder.offset + ladder.step);
    }
    for (std::size_t n = 0; n < ctx.models.size(); ++n) {
        const PoleLadder ladder = pole_ladder(ctx.models[n]);
        for (double p = tuple.lambda[n] + ladder.offset; p <= reach;
             p += ladder.step)
            points.push_back(p);
    }
    std::sort(points.begin(), points.end());

    double first = reach;
    for (std::size_t i = 0; i < points.size();) {
        std::size_t j = i;
        while (j < points.size() && points[j] - points[i] < 1e-9)
            ++j;
        int order = static_cast<int>(j - i);
        const double rounded = std::round(points[i]);
        if (std::fabs(points[i] - rounded) < 1e-9 && rounded >= 1.0 &&
            rounded <= lam - 1.0)
            --order; // cancelled by the polynomial zero
        if (order >= 1) {
            first = points[i];
            break;
        }
        i = j;
    }
    return first - std::min(kappa_offset, 0.5 * first);
}

// Integral of the tuple integrand along Re(s) = -kappa over Im(s) in
// [0, height], composite Gauss-Legendre.
cxd line_integral_segment(const EngineContext& ctx, const IndexTuple& tuple,
                          double kappa, double t_lo, double t_hi,
                          const QuadratureConfig& quad)
{
    const GaussRule& rule = gauss_rule(quad.panel_points);
    cxd total = 0.0;
    for (double lo = t_lo; lo < t_hi; lo += quad.panel_height) {
        const double hi = std::min(lo + quad.panel_height, t_hi);
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        cxd panel = 0.0;
        for (int i = 0; i < quad.panel_points; ++i) {
            const cxd s(-kappa, mid + half * rule.nodes[i]);
            panel += rule.weights[i] * ctx.eval(tuple, s);
        }
        total += half * panel;
    }
    return total;
}

// (1/(2 pi i)) * integral over the full vertical line, exploiting conjugate
// symmetry: equal to Re(upper-half integral) / pi.
double tuple_contour_integral(const EngineContext& ctx,
                              const IndexTuple& tuple,
                              const ExpansionConfig& config)
{
    // Every singularity of the tuple integrand sits at Re(s) >= 0 (hop
    // ladders at the positive shape offsets, plus the origin when
    // lambda_{N-1} = 0), so any line left of the first one encloses the
    // same residues.  The integral scales like z^{first pole}; a line far
    // to its left makes the integrand astronomically larger than the
    // result and the oscillatory cancellation unresolvable in doubles.
    // Hence: just left of the first uncancelled pole (zeros of the closed
    // form Gamma(lambda_{N-1} - s) / Gamma(1 - s) polynomial remove hop
    // poles at integers below lambda_{N-1}).
    const double kappa = -contour_abscissa(ctx, tuple, config.kappa_offset);
    double height = config.quadrature.truncation_height;
    cxd upper = line_integral_segment(ctx, tuple, kappa, 0.0, height,
                                      config.quadrature);
    double prev = upper.real() / 3.14159265358979323846;
    for (int round = 0; round < 6; ++round) {
        upper += line_integral_segment(ctx, tuple, kappa, height, 2.0 * height,
                                       config.quadrature);
        height *= 2.0;
        const double cur = upper.real() / 3.14159265358979323846;
        // Absolute floor: the tuple integrals are O(1) while their sum can
        // be ~1e-6, so per-tuple accuracy has to be well below that.
        if (std::fabs(cur - prev) <= 1e-12 * std::max(std::fabs(cur), 1e-3))
            return cur;
        prev = cur;
    }
    std::ostringstream msg;
    msg << "outage_contour: quadrature did not settle; last estimates "
        << prev << " at height " << height;
    throw numeric_error(msg.str());
}

double finish_estimate(double p)
{
    if (p < -1e-6 || p > 1.0 + 1e-6)
        throw numeric_error("outage estimate overshoots [0, 1]: " +
                            std::to_string(p));
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

OutageEstimate outage_contour(const LinkSpec& link, double gamma_bar,
                              const ExpansionConfig& config)
{
    const EngineContext ctx(link, gamma_bar);
    const std::vector<IndexTuple> tuples =
        enumerate_index_tuples(config, ctx.rho);
    double sum = 0.0;
    for (const IndexTuple& t : tuples)
        sum += t.sign * t.weight * tuple_contour_integral(ctx, t, config);
    OutageEstimate est;
    est.method = Method::contour;
    est.tolerance = 1e-9;
    est.value = finish_estimate(1.0 - sum);
    return est;
}

PoleList pole_enumeration(const LinkSpec& link, const IndexTuple& tuple,
                          double s_max)
{
    PoleList out;
    out.has_origin_pole = tuple.lambda_last() == 0;
    std::vector<PoleList::Pole> raw;
    for (std::size_t n = 0; n < link.n_hops(); ++n) {
        const PoleLadder ladder = pole_ladder(link.hops[n].fading);
        const double base = tuple.lambda[n] + ladder.offset;
        for (int j = 0;; ++j) {
            const double loc = base + ladder.step * j;
            if (loc > s_max)
                break;
            raw.push_back({loc, 1});
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.location < b.location; });
    for (const PoleList::Pole& p : raw) {
        if (!out.poles.empty() &&
            std::fabs(out.poles.back().location - p.location) < 1e-9)
            out.poles.back().order += p.order;
        else
            out.poles.push_back(p);
    }
    return out;
}

double default_s_max(const LinkSpec& link, double gamma_bar)
{
    double m_min = min_shape(link.hops.front().fading);
    for (const HopSpec& hop : link.hops)
        m_min = std::min(m_min, min_shape(hop.fading));
    const double extent = 40.0 / std::log(std::max(gamma_bar, 1.0 + 1e-9));
    return m_min + std::clamp(extent, 2.0, 25.0);
}

OutageEstimate outage_residue_series(const LinkSpec& link, double gamma_bar,
                                     const ExpansionConfig& config,
                                     double s_max)
{
    if (s_max <= 0.0)
        s_max = default_s_max(link, gamma_bar);
    const EngineContext ctx(link, gamma_bar);
    const std::vector<IndexTuple> tuples =
        enumerate_index_tuples(config, ctx.rho);

    double sum = 0.0;      // total of sign * weight * (contour integral value)
    double res_scale = 0.0; // largest |residue contribution| seen
    for (const IndexTuple& t : tuples) {
        const PoleList poles = pole_enumeration(link, t, s_max);
        double residues = 0.0;
        if (poles.has_origin_pole) {
            // res at s = 0 of -1/s * z^s * prod M[...; 1 + lambda - s]:
            // minus the product of Mellin values at the pole.
            cxd prod = 1.0;
            for (std::size_t n = 0; n < ctx.models.size(); ++n)
                prod *= mellin(ctx.models[n], 1.0 + t.lambda[n]);
            residues += -prod.real();
        }
        for (std::size_t i = 0; i < poles.poles.size(); ++i) {
            const double s0 = poles.poles[i].location;
            const int order = poles.poles[i].order;
            // Neighbor gap: previous/next reported pole, the origin pole if
            // present, and the first ladder point beyond s_max.
            double gap = s0; // distance to the origin
            if (i > 0)
                gap = std::min(gap, s0 - poles.poles[i - 1].location);
            if (i + 1 < poles.poles.size())
                gap = std::min(gap, poles.poles[i + 1].location - s0);
            else {
                double max_step = 1.0;
                for (const HopSpec& hop : link.hops)
                    max_step =
                        std::max(max_step, pole_ladder(hop.fading).step);
                const PoleList beyond =
                    pole_enumeration(link, t, s_max + max_step + 1.0);
                for (const auto& p : beyond.poles)
                    if (p.location > s0 + 1e-9) {
                        gap = std::min(gap, p.location - s0);
                        break;
                    }
            }
            const double radius = 0.45 * gap;
            auto g = [&](cxd s) {
                return std::pow(s - s0, order) * ctx.eval(t, s);
            };
            std::vector<cxd> derivs;
            try {
                derivs = cauchy_derivatives(g, s0, order - 1, radius);
            } catch (const numeric_error& e) {
                std::ostringstream msg;
                msg << e.what() << " (pole s=" << s0 << " order " << order
                    << " radius " << radius << ")";
                throw numeric_error(msg.str());
            }
            double factorial = 1.0;
            for (int k = 2; k < order; ++k)
                factorial *= k;
            const double res = (derivs[order - 1] / factorial).real();
            residues += res;
            res_scale = std::max(res_scale, std::fabs(t.weight * res));
        }
        sum += t.sign * t.weight * (-residues);
    }

    OutageEstimate est;
    est.method = Method::residue_series;
    est.tolerance = 1e-9;
    const double p = 1.0 - sum;
    const double tail = std::pow(ctx.z_eff, s_max);
    if (tail > 1e-12 * std::max(std::fabs(p), 1e-300))
        est.note = "residue tail not negligible: z^s_max = " +
                   std::to_string(tail);
    est.value = finish_estimate(p);
    return est;
}

} // namespace afrelay
