#ifndef AFRELAY_SWEEP_HPP
#define AFRELAY_SWEEP_HPP

#include "afrelay/config.hpp"

#include <string>
#include <vector>

namespace afrelay {

struct SweepResult {
    std::string csv;                      // full document, header included
    std::vector<std::string> diagnostics; // one entry per failed cell
    bool mc_within_tolerance = true;      // 3 stderr + 0.1% vs contour

    bool any_failure() const { return !diagnostics.empty(); }
};

// Evaluates every configured engine on the dB grid and renders the CSV:
// column gamma_bar_db, one column per engine in the configured order, and
// mc_stderr when Monte Carlo runs.  A failing engine leaves its cell empty
// and appends a diagnostic; the sweep continues.
SweepResult run_sweep(const RunConfig& config);

// Shortest decimal representation that round-trips through double.
std::string format_double(double v);

std::vector<double> sweep_grid_db(const SweepSpec& sweep);

} // namespace afrelay

#endif
