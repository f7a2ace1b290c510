#pragma once

#include <stdexcept>
#include <string>

namespace koba {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry preconditions.
struct NotInterior : Error {
    using Error::Error;
};
struct ZeroDirection : Error {
    using Error::Error;
};
struct EmptyErosion : Error {
    using Error::Error;
};
struct InvalidRegion : Error {
    using Error::Error;
};
struct BranchViolation : Error {
    using Error::Error;
};

// Solver failures.
struct SolverDiverged : Error {
    using Error::Error;
};
struct InfeasibleLevelSet : Error {
    using Error::Error;
};
struct DegenerateGeometry : Error {
    using Error::Error;
};

// Scalar-function domain violations.
struct DomainError : Error {
    using Error::Error;
};
struct DegenerateFit : Error {
    using Error::Error;
};

// Domain-spec documents (CLI input files).
struct SpecParseError : Error {
    using Error::Error;
};

}  // namespace koba
