#pragma once

#include <stdexcept>
#include <string>

namespace flk {

/// Base class for failures that stem from the mathematics rather than from
/// malformed input (the CLI maps these to exit code 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a Laurent or integer polynomial division leaves a remainder.
class InexactDivision : public DomainError {
public:
    using DomainError::DomainError;
};

/// A bound quiver presentation still has surviving paths at the length cap.
class NotNilpotentBelowCap : public DomainError {
public:
    using DomainError::DomainError;
};

/// Mesh propagation produced a non-positive dimension.
class NonPositiveDimension : public DomainError {
public:
    using DomainError::DomainError;
};

/// A mono/epi flag is incompatible with the dimensions on its arrow.
class FlagContradiction : public DomainError {
public:
    using DomainError::DomainError;
};

/// Idempotent lifting or splitting failed to converge.
class LiftingFailure : public DomainError {
public:
    using DomainError::DomainError;
};

/// A parameter violates the precondition of an operation.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input (presentation files, Cartan type strings, flag values) is malformed.
class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace flk
