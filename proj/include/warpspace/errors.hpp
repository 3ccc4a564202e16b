#pragma once

#include <stdexcept>
#include <string>

namespace warpspace {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file / descriptor does not match the documented schema.
// `field` names the offending entry.
struct SchemaError : Error {
    std::string field;
    SchemaError(std::string field_, const std::string& what_)
        : Error("schema violation at '" + field_ + "': " + what_), field(std::move(field_)) {}
};

// Coordinate tuple does not match the space's shape.
struct ShapeMismatch : Error {
    using Error::Error;
};

// Operation needs a closed-form metric but the space has none.
struct NonPrimitiveSpace : Error {
    using Error::Error;
};

// Dyadic refinement hit the depth cap without stabilizing.
struct ConvergenceFailure : Error {
    double previous_estimate;
    double last_estimate;
    ConvergenceFailure(double prev, double last)
        : Error("path length refinement did not converge (last two estimates " +
                std::to_string(prev) + ", " + std::to_string(last) + ")"),
          previous_estimate(prev), last_estimate(last) {}
};

// No path between the query points.
struct DisconnectedError : Error {
    using Error::Error;
};

// Map failed both gluing certification tests.
struct CertificationFailure : Error {
    using Error::Error;
};

} // namespace warpspace
