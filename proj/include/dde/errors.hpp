#pragma once

#include <stdexcept>
#include <string>

namespace dde {

// Grid step incompatible with the delays, or malformed parameters.
struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A delayed lookup fell outside the known part of the history.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The integrator produced a non-finite state.
struct BlowUpError : std::runtime_error {
    BlowUpError(const std::string& what, double t_blowup)
        : std::runtime_error(what), t(t_blowup) {}
    double t;
};

// Initial segment outside the admissible set (D or D0) for an
// operation that requires membership.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A D0 construction produced a segment with negative samples.
struct ConstructionFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dde
