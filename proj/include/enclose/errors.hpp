#pragma once

#include <stdexcept>
#include <string>

namespace enclose {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a query ray passes through a vertex or runs along an edge
struct DegenerateCrossing : Error {
    using Error::Error;
};

// query point lies on the walk whose winding was requested
struct PointOnBoundary : Error {
    using Error::Error;
};

// query point lies on an obstacle segment
struct PointOnObstacle : Error {
    using Error::Error;
};

// query point lies inside or on a unit disk
struct PointCoveredByObstacle : Error {
    using Error::Error;
};

// grid pitch too large for the instance's feature separation
struct ResolutionTooCoarse : Error {
    using Error::Error;
};

// instance violates a general-position requirement
struct DegenerateInput : Error {
    using Error::Error;
};

// half-plane point sets along a cell pair are not nested
struct ChainViolation : Error {
    using Error::Error;
};

// center-segment drawing violates general position
struct DegenerateDrawing : Error {
    using Error::Error;
};

// a point shares a face with the unbounded face, no finite cut exists
struct NoFiniteCut : Error {
    using Error::Error;
};

// no selection of obstacles can satisfy the request
struct Infeasible : Error {
    using Error::Error;
};

// a produced selection failed its own enclosure check
struct VerificationFailed : Error {
    using Error::Error;
};

// cycle decomposition left a non-negligible remainder
struct ResidualTooLarge : Error {
    using Error::Error;
};

// floating-point solve drifted past its tolerances
struct NumericalFailure : Error {
    using Error::Error;
};

// exhaustive search ran out without a usable answer
struct BudgetExceeded : Error {
    using Error::Error;
};

// solver invoked on the wrong obstacle kind
struct MethodKindMismatch : Error {
    using Error::Error;
};

// random instance generation could not satisfy its constraints
struct GenerationFailed : Error {
    using Error::Error;
};

// malformed instance or solution file
struct ParseError : Error {
    using Error::Error;
};

} // namespace enclose
