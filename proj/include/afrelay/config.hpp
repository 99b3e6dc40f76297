#ifndef AFRELAY_CONFIG_HPP
#define AFRELAY_CONFIG_HPP

#include "afrelay/estimate.hpp"
#include "afrelay/link.hpp"
#include "afrelay/outage_integral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace afrelay {

struct SweepSpec {
    double start_db = 10.0;
    double stop_db = 40.0;
    double step_db = 2.5;
};

struct McSpec {
    std::int64_t trials = 10'000'000;
    std::uint64_t seed = 1;
    int workers = 0; // 0 = hardware concurrency
};

struct RunConfig {
    LinkSpec link;
    SweepSpec sweep;
    std::vector<Method> engines;
    McSpec mc;
    ExpansionConfig expansion;
    std::string output_path;
    std::vector<std::string> warnings; // non-fatal normalizations
};

// Parses the line-oriented config format documented in
// docs/config-format.md.  Throws config_error with the offending field
// path on schema or range violations.
RunConfig parse_config(const std::string& text);

// Engine column name used both on the command line and in CSV headers.
const char* engine_column(Method method);

// Inverse of engine_column; throws config_error on unknown names.
Method parse_engine(const std::string& name);

// Named preset config texts (fig2 .. fig9); throws config_error on
// unknown names.  preset_names lists them in order.
const std::string& preset_text(const std::string& name);
std::vector<std::string> preset_names();

} // namespace afrelay

#endif
