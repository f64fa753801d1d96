// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace belltet {

// Base for all typed failures; the CLI maps each concrete type to an exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// State construction from (c1,c2,c3) that violates the spectrum constraints.
struct OutsideTetrahedron : Error {
    using Error::Error;
};

// 4x4 matrix lacks the Bell-diagonal sparsity/symmetry pattern.
struct NotBellDiagonal : Error {
    using Error::Error;
};

// Probability vector fails nonnegativity or normalization.
struct InvalidDistribution : Error {
    using Error::Error;
};

// Kraus set with sum K^dag K != identity fed to an apply path.
struct NotTracePreserving : Error {
    using Error::Error;
};

// Channel strength parameter outside its admissible interval.
struct InvalidStrength : Error {
    using Error::Error;
};

// Iterative minimizer exhausted its budget without meeting its tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

// Ray direction with zero length.
struct DegenerateRay : Error {
    using Error::Error;
};

// Closed-form derivative requested outside its open domain.
struct OutsideDomain : Error {
    using Error::Error;
};

// Piecewise ray formula requested for a ray of a different family.
struct WrongFamily : Error {
    using Error::Error;
};

// Contour/isosurface extraction found no crossings at the requested level.
struct EmptyLevelSet : Error {
    using Error::Error;
};

}  // namespace belltet
