#include "afrelay/estimate.hpp"

namespace afrelay {

const char* method_name(Method method)
{
    switch (method) {
    case Method::contour: return "contour";
    case Method::residue_series: return "residue_series";
    case Method::asymptotic_full: return "asymptotic_full";
    case Method::asymptotic_leading: return "asymptotic_leading";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

} // namespace afrelay
