#include "afrelay/config.hpp"
#include "afrelay/errors.hpp"
#include "afrelay/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw afrelay::config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage probability of fixed-gain AF multihop relay links"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand(
        "run", "Evaluate the configured engines over an SNR sweep");
    std::string config_path, preset, engines_arg, out_path;
    long long trials = -1;
    long long seed = -1;
    int workers = -1;
    bool check_mc = false;
    run->add_option("--config", config_path, "Link/sweep config file");
    run->add_option("--preset", preset,
                    "Built-in parameter preset (fig2 .. fig9)");
    run->add_option("--engines", engines_arg,
                    "Comma-separated engine list overriding the config");
    run->add_option("--out", out_path, "CSV output path (- for stdout)");
    run->add_option("--trials", trials, "Monte Carlo trial count override");
    run->add_option("--seed", seed, "Monte Carlo seed override");
    run->add_option("--workers", workers,
                    "Monte Carlo worker count (0 = hardware)");
    run->add_flag("--check", check_mc,
                  "Fail (exit 3) when Monte Carlo and the contour engine "
                  "disagree beyond 3 stderr + 0.1%");

    CLI11_PARSE(app, argc, argv);

    try {
        if (config_path.empty() == preset.empty()) {
            std::cerr << "error: exactly one of --config or --preset is "
                         "required\n";
            return 1;
        }
        const std::string text = preset.empty()
                                     ? read_file(config_path)
                                     : afrelay::preset_text(preset);
        afrelay::RunConfig config = afrelay::parse_config(text);
        for (const std::string& warning : config.warnings)
            std::cerr << "warning: " << warning << '\n';

        if (!engines_arg.empty()) {
            config.engines.clear();
            std::stringstream ss(engines_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                config.engines.push_back(afrelay::parse_engine(item));
            if (config.engines.empty())
                throw afrelay::config_error("--engines: empty list");
        }
        if (trials >= 0) {
            if (trials < 1)
                throw afrelay::config_error("--trials: must be >= 1");
            config.mc.trials = trials;
        }
        if (seed >= 0)
            config.mc.seed = static_cast<std::uint64_t>(seed);
        if (workers >= 0)
            config.mc.workers = workers;
        if (!out_path.empty())
            config.output_path = out_path;

        const afrelay::SweepResult result = afrelay::run_sweep(config);
        for (const std::string& diag : result.diagnostics)
            std::cerr << "engine failure: " << diag << '\n';

        if (config.output_path.empty() || config.output_path == "-") {
            std::cout << result.csv;
        } else {
            std::ofstream out(config.output_path, std::ios::binary);
            if (!out)
                throw afrelay::config_error("cannot write '" +
                                            config.output_path + "'");
            out << result.csv;
        }

        if (result.any_failure())
            return 2;
        if (check_mc && !result.mc_within_tolerance) {
            std::cerr << "acceptance check failed: Monte Carlo vs contour "
                         "beyond 3 stderr + 0.1%\n";
            return 3;
        }
        return 0;
    } catch (const afrelay::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
