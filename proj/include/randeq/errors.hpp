#pragma once

#include <stdexcept>
#include <string>

namespace randeq {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// pdf evaluation requested on a density containing an atom component.
struct AtomEvaluation : Error {
    using Error::Error;
};

/// Operation restricted to gaussian/atom components met a uniform component.
struct UnsupportedComponent : Error {
    using Error::Error;
};

/// Combination count exceeds the configured cap.
struct CombinationOverflow : Error {
    using Error::Error;
};

/// Pivot below tolerance during elimination.
struct SingularSystem : Error {
    using Error::Error;
};

/// Vector length does not match the equation system layout.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Partitioned estimator requested on a system with a shared joint block.
struct NotPartitioned : Error {
    using Error::Error;
};

/// Prior support disjoint from likelihood support at grid resolution.
struct ZeroPosterior : Error {
    using Error::Error;
};

/// All-atom parameter stack collapsed to zero variance at an exact solution.
struct DegenerateVariance : Error {
    using Error::Error;
};

/// Mixture component count would exceed the configured cap.
struct ComponentExplosion : Error {
    using Error::Error;
};

/// Scenario file failed schema validation; message carries the field path.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace randeq
