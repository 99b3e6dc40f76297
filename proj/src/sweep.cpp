#include "afrelay/sweep.hpp"
#include "afrelay/asymptotics.hpp"
#include "afrelay/errors.hpp"
#include "afrelay/montecarlo.hpp"
#include "afrelay/outage_integral.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

namespace afrelay {

std::string format_double(double v)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::vector<double> sweep_grid_db(const SweepSpec& sweep)
{
    const double span = sweep.stop_db - sweep.start_db;
    const auto count =
        static_cast<std::size_t>(std::floor(span / sweep.step_db + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = sweep.start_db + static_cast<double>(i) * sweep.step_db;
    return grid;
}

SweepResult run_sweep(const RunConfig& config)
{
    validate(config.link);
    const std::vector<double> grid = sweep_grid_db(config.sweep);

    SweepResult result;
    std::ostringstream csv;
    csv << "gamma_bar_db";
    bool has_mc = false;
    for (Method engine : config.engines) {
        csv << ',' << engine_column(engine);
        if (engine == Method::monte_carlo)
            has_mc = true;
    }
    if (has_mc)
        csv << ",mc_stderr";
    csv << '\n';

    for (double db : grid) {
        const double gamma_bar = std::pow(10.0, db / 10.0);
        csv << format_double(db);
        std::optional<double> contour_value;
        std::optional<OutageEstimate> mc_estimate;
        for (Method engine : config.engines) {
            csv << ',';
            try {
                OutageEstimate est;
                switch (engine) {
                case Method::contour:
                    est = outage_contour(config.link, gamma_bar,
                                         config.expansion);
                    contour_value = est.value;
                    break;
                case Method::residue_series:
                    est = outage_residue_series(config.link, gamma_bar,
                                                config.expansion);
                    break;
                case Method::asymptotic_full:
                    est = outage_asymptotic_full(config.link, gamma_bar,
                                                 config.expansion);
                    break;
                case Method::asymptotic_leading:
                    est = outage_asymptotic_leading(config.link, gamma_bar);
                    break;
                case Method::monte_carlo:
                    est = estimate_outage(config.link, gamma_bar,
                                          config.mc.trials, config.mc.seed,
                                          config.mc.workers);
                    mc_estimate = est;
                    break;
                }
                csv << format_double(est.value);
            } catch (const std::exception& e) {
                result.diagnostics.push_back(
                    std::string(engine_column(engine)) + " at " +
                    format_double(db) + " dB: " + e.what());
            }
        }
        if (has_mc) {
            csv << ',';
            if (mc_estimate)
                csv << format_double(mc_estimate->std_error);
        }
        csv << '\n';

        if (contour_value && mc_estimate && *contour_value >= 1e-5) {
            const double tol = 3.0 * mc_estimate->std_error +
                               1e-3 * *contour_value;
            if (std::fabs(mc_estimate->value - *contour_value) > tol)
                result.mc_within_tolerance = false;
        }
    }
    result.csv = csv.str();
    return result;
}

} // namespace afrelay
