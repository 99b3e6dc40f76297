#ifndef AFRELAY_ERRORS_HPP
#define AFRELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace afrelay {

// Evaluation hit a pole, a series failed to converge, or a quadrature did
// not settle.  Carries a human-readable description of what went wrong.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-range configuration input.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace afrelay

#endif
