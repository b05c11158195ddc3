#pragma once

#include <stdexcept>
#include <string>

namespace qdirac {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverse requested for a zero or zero-divisor quaternion (a*conj(a) ~ 0).
struct ZeroDivisorOrZero : Error { using Error::Error; };

// Operation requires a non-zero input.
struct ZeroInput : Error { using Error::Error; };

// Projector construction requires alpha with alpha^2 != 0.
struct ZeroDivisorAlpha : Error { using Error::Error; };

// Operation requires a purely vectorial quaternion (scalar part zero).
struct NotPureVector : Error { using Error::Error; };

// Operation requires a zero-divisor argument.
struct NotZeroDivisor : Error { using Error::Error; };

// Kernel evaluated at (or too near) its singularity.
struct SingularPoint : Error { using Error::Error; };

// Layer-potential target violates the near-surface quadrature guard.
struct TooCloseToBoundary : Error { using Error::Error; };

// Residual kind does not match the supplied parameter variant.
struct KindMismatch : Error { using Error::Error; };

// Geometry is not symmetric under x3 -> -x3.
struct DomainNotReflectionSymmetric : Error { using Error::Error; };

// Scenario configuration failed schema validation.
struct ConfigInvalid : Error { using Error::Error; };

} // namespace qdirac
